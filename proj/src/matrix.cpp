#include "cddembed/matrix.hpp"

#include <tuple>
#include <string>
#include <utility>

#include "cddembed/error.hpp"

namespace cddembed {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 16) || !is_prime(p)) {
    throw Error("field modulus " + std::to_string(p) +
                " is not a prime in [2, 65536)");
  }
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw Error("inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  return reduce(t);
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols,
               std::vector<Residue> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("matrix of size " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " given " +
                            std::to_string(entries_.size()) + " entries");
  }
  for (Residue e : entries_) {
    if (e >= field_.modulus()) {
      throw Error("matrix entry " + std::to_string(e) +
                  " is not a residue mod " + std::to_string(field_.modulus()));
    }
  }
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field,
                         const std::vector<std::vector<std::int64_t>>& rows,
                         std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("ragged rows in matrix literal");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m.entries_[r * cols + c] = field.reduce(rows[r][c]);
    }
  }
  return m;
}

Matrix Matrix::from_row_vectors(PrimeField field, std::size_t cols,
                                const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("row vector of length " +
                              std::to_string(rows[r].size()) + ", expected " +
                              std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(PrimeField field, std::size_t rows,
                            const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw DimensionMismatch("column vector of length " +
                              std::to_string(columns[c].size()) +
                              ", expected " + std::to_string(rows));
    }
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Residue v) {
  if (v >= field_.modulus()) throw Error("entry is not a canonical residue");
  entries_[r * cols_ + c] = v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
    throw DimensionMismatch("matrix product shape mismatch");
  }
  Matrix out(field_, rows_, rhs.cols_);
  const std::uint64_t p = field_.modulus();
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        acc += static_cast<std::uint64_t>((*this)(r, k)) * rhs(k, c);
        if (acc >= (1ull << 62)) acc %= p;
      }
      out.entries_[r * rhs.cols_ + c] = static_cast<Residue>(acc % p);
    }
  }
  return out;
}

Vector Matrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(rows_, 0);
  const std::uint64_t p = field_.modulus();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      acc += static_cast<std::uint64_t>((*this)(r, k)) * v[k];
      if (acc >= (1ull << 62)) acc %= p;
    }
    out[r] = static_cast<Residue>(acc % p);
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.entries_[r * cols.size() + j] = (*this)(r, cols[j]);
    }
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out.entries_[i * cols_ + c] = (*this)(rows[i], c);
    }
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || !(field_ == rhs.field_)) {
    throw DimensionMismatch("hstack row or field mismatch");
  }
  Matrix out(field_, rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[r * out.cols_ + c] = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      out.entries_[r * out.cols_ + cols_ + c] = rhs(r, c);
    }
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
  if (cols_ != rhs.cols_ || !(field_ == rhs.field_)) {
    throw DimensionMismatch("vstack column or field mismatch");
  }
  Matrix out(field_, rows_ + rhs.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  std::copy(rhs.entries_.begin(), rhs.entries_.end(),
            out.entries_.begin() + entries_.size());
  return out;
}

bool Matrix::is_zero() const { return vec::is_zero(entries_); }

RrefResult rref(const Matrix& input) {
  const PrimeField& f = input.field();
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  std::vector<Residue> a = input.entries();
  auto at = [&](std::size_t r, std::size_t c) -> Residue& { return a[r * cols + c]; };

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pr = lead;
    while (pr < rows && at(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(pr, k), at(lead, k));
    }
    const Residue s = f.inv(at(lead, c));
    for (std::size_t k = c; k < cols; ++k) at(lead, k) = f.mul(at(lead, k), s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || at(r, c) == 0) continue;
      const Residue factor = at(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        at(r, k) = f.sub(at(r, k), f.mul(factor, at(lead, k)));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return {Matrix(f, rows, cols, std::move(a)), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Vector> solve(const Matrix& m, std::span<const Residue> target) {
  if (target.size() != m.rows()) {
    throw DimensionMismatch("solve: target length " + std::to_string(target.size()) +
                            " does not match " + std::to_string(m.rows()) + " rows");
  }
  Matrix aug = m.hstack(Matrix::from_columns(m.field(), m.rows(),
                                             {Vector(target.begin(), target.end())}));
  RrefResult red = rref(aug);
  Vector c(m.cols(), 0);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] == m.cols()) return std::nullopt;
    c[red.pivots[i]] = red.reduced(i, m.cols());
  }
  return c;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RrefResult red = rref(m.hstack(Matrix::identity(m.field(), n)));
  if (red.pivots.size() < n || (n > 0 && red.pivots[n - 1] != n - 1)) {
    return std::nullopt;
  }
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, red.reduced(r, n + c));
  }
  return inv;
}

Matrix nullspace(const Matrix& m) {
  const PrimeField& f = m.field();
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      v[red.pivots[i]] = f.neg(red.reduced(i, free));
    }
    basis.push_back(std::move(v));
  }
  return row_space_basis(Matrix::from_row_vectors(f, m.cols(), basis));
}

Matrix row_space_basis(const Matrix& m) {
  RrefResult red = rref(m);
  std::vector<std::size_t> keep(red.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return red.reduced.select_rows(keep);
}

namespace vec {

Vector add(const PrimeField& f, std::span<const Residue> a,
           std::span<const Residue> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vector sub(const PrimeField& f, std::span<const Residue> a,
           std::span<const Residue> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vector scale(const PrimeField& f, Residue s, std::span<const Residue> a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

bool is_zero(std::span<const Residue> a) {
  for (Residue x : a) {
    if (x != 0) return false;
  }
  return true;
}

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace vec

}  // namespace cddembed
