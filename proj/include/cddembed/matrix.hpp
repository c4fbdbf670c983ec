#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cddembed/field.hpp"

namespace cddembed {

using Vector = std::vector<Residue>;

// Dense row-major matrix over a prime field. Entries are always canonical
// residues.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);
  // Throws DimensionMismatch if entries.size() != rows * cols and Error if an
  // entry is not a canonical residue.
  Matrix(PrimeField field, std::size_t rows, std::size_t cols,
         std::vector<Residue> entries);

  static Matrix identity(PrimeField field, std::size_t n);
  // Integer rows reduced mod p; all rows must have equal length.
  static Matrix from_rows(PrimeField field,
                          const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t cols = 0);
  static Matrix from_row_vectors(PrimeField field, std::size_t cols,
                                 const std::vector<Vector>& rows);
  static Matrix from_columns(PrimeField field, std::size_t rows,
                             const std::vector<Vector>& columns);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Residue v);
  const std::vector<Residue>& entries() const { return entries_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::span<const Residue> row_view(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  Matrix transpose() const;
  Matrix multiply(const Matrix& rhs) const;
  Vector apply(std::span<const Residue> v) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix hstack(const Matrix& rhs) const;
  Matrix vstack(const Matrix& rhs) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form. Columns are scanned left to right; the pivot of a
// column is the first row at or below the current row with a nonzero entry.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Some c with m * c = target, or nullopt. Free variables are set to zero.
std::optional<Vector> solve(const Matrix& m, std::span<const Residue> target);

// Nullopt when m is singular or not square.
std::optional<Matrix> inverse(const Matrix& m);

// Rows form a basis (in RREF) of {c : m * c = 0}.
Matrix nullspace(const Matrix& m);

// RREF with zero rows dropped; the canonical basis of the row space.
Matrix row_space_basis(const Matrix& m);

namespace vec {
Vector add(const PrimeField& f, std::span<const Residue> a,
           std::span<const Residue> b);
Vector sub(const PrimeField& f, std::span<const Residue> a,
           std::span<const Residue> b);
Vector scale(const PrimeField& f, Residue s, std::span<const Residue> a);
bool is_zero(std::span<const Residue> a);
Vector unit(std::size_t n, std::size_t i);
}  // namespace vec

}  // namespace cddembed
