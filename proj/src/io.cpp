#include "cddembed/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cddembed/error.hpp"

namespace cddembed {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++line_no;
    Line line{line_no, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty() && line.tokens.front().text.front() != '#') {
      out.push_back(std::move(line));
    }
    pos = end + 1;
  }
  return out;
}

std::int64_t parse_int(const Token& t, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError("expected an integer, found '" + std::string(t.text) + "'", line,
                     t.column);
  }
  return v;
}

const Line& expect_keyword(const std::vector<Line>& lines, std::size_t idx,
                           std::string_view keyword, std::size_t arity) {
  if (idx >= lines.size()) {
    throw ParseError("unexpected end of input, expected '" + std::string(keyword) + "'",
                     lines.empty() ? 1 : lines.back().number + 1, 1);
  }
  const Line& l = lines[idx];
  if (l.tokens[0].text != keyword) {
    throw ParseError("expected '" + std::string(keyword) + "', found '" +
                         std::string(l.tokens[0].text) + "'",
                     l.number, l.tokens[0].column);
  }
  if (arity != 0 && l.tokens.size() != arity + 1) {
    const Token& t = l.tokens.size() > arity + 1 ? l.tokens[arity + 1] : l.tokens.back();
    throw ParseError("'" + std::string(keyword) + "' takes " + std::to_string(arity) +
                         " argument(s)",
                     l.number, t.column);
  }
  return l;
}

}  // namespace

LabeledMatrix parse_pfm(std::string_view text) {
  std::vector<Line> lines = tokenize_lines(text);
  const Line& header = expect_keyword(lines, 0, "pfm", 1);
  if (header.tokens[1].text != "1") {
    throw ParseError("unsupported pfm version '" + std::string(header.tokens[1].text) + "'",
                     header.number, header.tokens[1].column);
  }
  const Line& fline = expect_keyword(lines, 1, "field", 1);
  const std::int64_t p = parse_int(fline.tokens[1], fline.number);
  if (p < 2 || p >= (1 << 16) || !is_prime(static_cast<std::uint32_t>(p))) {
    throw ParseError("field modulus must be a prime below 65536", fline.number,
                     fline.tokens[1].column);
  }
  PrimeField field(static_cast<std::uint32_t>(p));
  const Line& sline = expect_keyword(lines, 2, "size", 2);
  const std::int64_t rows = parse_int(sline.tokens[1], sline.number);
  const std::int64_t cols = parse_int(sline.tokens[2], sline.number);
  if (rows < 0 || cols < 0 || rows > 100000 || cols > 100000) {
    throw ParseError("invalid matrix size", sline.number, sline.tokens[1].column);
  }
  std::size_t idx = 3;
  std::vector<std::string> labels;
  if (idx < lines.size() && lines[idx].tokens[0].text == "labels") {
    const Line& l = lines[idx];
    if (l.tokens.size() != static_cast<std::size_t>(cols) + 1) {
      throw ParseError("expected " + std::to_string(cols) + " labels, found " +
                           std::to_string(l.tokens.size() - 1),
                       l.number, l.tokens[0].column);
    }
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      std::string_view t = l.tokens[i].text;
      if (t.find_first_of("()") != std::string_view::npos) {
        throw ParseError("label '" + std::string(t) + "' contains a parenthesis", l.number,
                         l.tokens[i].column);
      }
      labels.emplace_back(t);
    }
    ++idx;
  }
  std::vector<Residue> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (std::int64_t r = 0; r < rows; ++r, ++idx) {
    if (idx >= lines.size()) {
      throw ParseError("expected " + std::to_string(rows) + " matrix rows, found " +
                           std::to_string(r),
                       lines.back().number + 1, 1);
    }
    const Line& l = lines[idx];
    if (l.tokens.size() != static_cast<std::size_t>(cols)) {
      throw ParseError("expected " + std::to_string(cols) + " entries, found " +
                           std::to_string(l.tokens.size()),
                       l.number, l.tokens.front().column);
    }
    for (const Token& t : l.tokens) {
      const std::int64_t v = parse_int(t, l.number);
      if (v < 0 || v >= p) {
        throw ParseError("entry " + std::string(t.text) + " is not in [0, " +
                             std::to_string(p) + ")",
                         l.number, t.column);
      }
      entries.push_back(static_cast<Residue>(v));
    }
  }
  if (idx < lines.size()) {
    throw ParseError("trailing content after matrix rows", lines[idx].number,
                     lines[idx].tokens[0].column);
  }
  return {Matrix(field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                 std::move(entries)),
          std::move(labels)};
}

std::string format_pfm(const Matrix& m, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "pfm 1\nfield " << m.field().modulus() << "\nsize " << m.rows() << ' ' << m.cols()
      << '\n';
  if (!labels.empty()) {
    out << "labels";
    for (const std::string& l : labels) out << ' ' << l;
    out << '\n';
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
  return out.str();
}

RepresentedMatroid parse_matroid(std::string_view text) {
  LabeledMatrix lm = parse_pfm(text);
  try {
    return RepresentedMatroid(std::move(lm.matrix), std::move(lm.labels));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

std::string format_matroid(const RepresentedMatroid& m) {
  return format_pfm(m.matrix(), m.labels());
}

MinorSchedule parse_schedule(std::string_view text) {
  MinorSchedule s;
  for (const Line& l : tokenize_lines(text)) {
    if (l.tokens.size() != 2) {
      throw ParseError("expected '<contract|delete> <label>'", l.number, l.tokens[0].column);
    }
    StepKind kind;
    if (l.tokens[0].text == "contract") {
      kind = StepKind::kContract;
    } else if (l.tokens[0].text == "delete") {
      kind = StepKind::kDelete;
    } else {
      throw ParseError("unknown step '" + std::string(l.tokens[0].text) + "'", l.number,
                       l.tokens[0].column);
    }
    s.steps.push_back({kind, std::string(l.tokens[1].text)});
  }
  return s;
}

std::string format_schedule(const MinorSchedule& s) {
  std::string out;
  for (const MinorStep& step : s.steps) {
    out += step.kind == StepKind::kContract ? "contract " : "delete ";
    out += step.label;
    out += '\n';
  }
  return out;
}

std::vector<std::vector<std::string>> parse_partition(std::string_view text) {
  std::vector<std::vector<std::string>> blocks;
  for (const Line& l : tokenize_lines(text)) {
    std::vector<std::string> block;
    for (const Token& t : l.tokens) block.emplace_back(t.text);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

namespace {

class SExprParser {
 public:
  explicit SExprParser(std::string_view text) : text_(text) {}

  SExpr parse_all() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("empty expression", line_, column());
    SExpr e = parse_one();
    skip_space();
    if (pos_ < text_.size()) {
      throw ParseError("trailing content after expression", line_, column());
    }
    return e;
  }

 private:
  std::size_t column() const { return pos_ - line_start_ + 1; }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  SExpr parse_one() {
    SExpr e;
    e.line = line_;
    e.column = column();
    if (text_[pos_] == ')') throw ParseError("unexpected ')'", line_, column());
    if (text_[pos_] == '(') {
      e.is_list = true;
      ++pos_;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unbalanced '('", e.line, e.column);
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        e.items.push_back(parse_one());
      }
      return e;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    e.atom = std::string(text_.substr(start, pos_ - start));
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

void format_into(const SExpr& e, std::string& out) {
  if (!e.is_list) {
    out += e.atom;
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += ' ';
    format_into(e.items[i], out);
  }
  out += ')';
}

}  // namespace

SExpr parse_sexpr(std::string_view text) { return SExprParser(text).parse_all(); }

std::string format_sexpr(const SExpr& e) {
  std::string out;
  format_into(e, out);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

std::string content_digest(std::string_view content) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : content) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace cddembed
