#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cddembed/matrix.hpp"
#include "cddembed/matroid.hpp"

namespace cddembed {

// Text formats. Every parser throws ParseError with a 1-based line and column.
//
//   pfm 1
//   field <p>
//   size <rows> <cols>
//   labels <l1> ... <lcols>      (optional)
//   <rows lines of cols residues>
//
// Blank lines and lines starting with '#' are ignored everywhere.

struct LabeledMatrix {
  Matrix matrix;
  std::vector<std::string> labels;  // empty when the file had none
};

LabeledMatrix parse_pfm(std::string_view text);
std::string format_pfm(const Matrix& m, const std::vector<std::string>& labels = {});

RepresentedMatroid parse_matroid(std::string_view text);
std::string format_matroid(const RepresentedMatroid& m);

// One step per line: "contract <label>" or "delete <label>".
MinorSchedule parse_schedule(std::string_view text);
std::string format_schedule(const MinorSchedule& s);

// One block per line, whitespace-separated labels.
std::vector<std::vector<std::string>> parse_partition(std::string_view text);

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t line = 0;
  std::size_t column = 0;
};

// Exactly one expression, optionally surrounded by whitespace.
SExpr parse_sexpr(std::string_view text);
std::string format_sexpr(const SExpr& e);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

// 64-bit FNV-1a, printed as 16 hex digits.
std::string content_digest(std::string_view content);

}  // namespace cddembed
