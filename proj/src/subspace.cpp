#include "cddembed/subspace.hpp"

#include <string>

#include "cddembed/error.hpp"

namespace cddembed {
namespace {

void require_compatible(const Subspace& x, const Subspace& y, const char* op) {
  if (!(x.field() == y.field()) || x.ambient() != y.ambient()) {
    throw DimensionMismatch(std::string(op) + ": subspaces of GF(" +
                            std::to_string(x.field().modulus()) + ")^" +
                            std::to_string(x.ambient()) + " and GF(" +
                            std::to_string(y.field().modulus()) + ")^" +
                            std::to_string(y.ambient()));
  }
}

}  // namespace

Subspace::Subspace(PrimeField field, std::size_t ambient)
    : basis_(field, 0, ambient) {}

Subspace Subspace::span(PrimeField field, std::size_t ambient,
                        const std::vector<Vector>& vectors) {
  return Subspace(row_space_basis(Matrix::from_row_vectors(field, ambient, vectors)));
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(row_space_basis(m)); }

Subspace Subspace::column_space(const Matrix& m) {
  return Subspace(row_space_basis(m.transpose()));
}

Subspace Subspace::full(PrimeField field, std::size_t ambient) {
  return Subspace(Matrix::identity(field, ambient));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(std::span<const Residue> v) const {
  if (v.size() != ambient()) throw DimensionMismatch("membership: vector length");
  // Reduce v against the RREF basis; v is inside iff it reduces to zero.
  const PrimeField& f = field();
  Vector w(v.begin(), v.end());
  std::size_t row = 0;
  for (std::size_t c = 0; c < ambient() && row < dim(); ++c) {
    if (basis_(row, c) == 0) continue;
    // c is the pivot column of this row.
    if (w[c] != 0) {
      const Residue factor = w[c];
      for (std::size_t k = c; k < ambient(); ++k) {
        w[k] = f.sub(w[k], f.mul(factor, basis_(row, k)));
      }
    }
    ++row;
  }
  return vec::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  require_compatible(*this, other, "containment");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row_view(r))) return false;
  }
  return true;
}

SumAndIntersection zassenhaus(const Subspace& x, const Subspace& y) {
  require_compatible(x, y, "zassenhaus");
  const PrimeField& f = x.field();
  const std::size_t n = x.ambient();
  Matrix block(f, x.dim() + y.dim(), 2 * n);
  for (std::size_t r = 0; r < x.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      block.set(r, c, x.basis()(r, c));
      block.set(r, n + c, x.basis()(r, c));
    }
  }
  for (std::size_t r = 0; r < y.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) block.set(x.dim() + r, c, y.basis()(r, c));
  }
  RrefResult red = rref(block);
  std::vector<Vector> sum_rows;
  std::vector<Vector> meet_rows;
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    Vector row = red.reduced.row(i);
    if (red.pivots[i] < n) {
      sum_rows.emplace_back(row.begin(), row.begin() + n);
    } else {
      meet_rows.emplace_back(row.begin() + n, row.end());
    }
  }
  return {Subspace::span(f, n, sum_rows), Subspace::span(f, n, meet_rows)};
}

Subspace sum(const Subspace& x, const Subspace& y) {
  require_compatible(x, y, "sum");
  return Subspace::row_space(x.basis().vstack(y.basis()));
}

Subspace intersect(const Subspace& x, const Subspace& y) {
  return zassenhaus(x, y).intersection;
}

std::size_t quotient_dim(const Subspace& x, const Subspace& a) {
  require_compatible(x, a, "quotient_dim");
  return x.dim() - intersect(x, a).dim();
}

std::vector<Vector> extend_basis(const Subspace& inside, const Subspace& seed) {
  require_compatible(inside, seed, "extend_basis");
  if (!inside.contains(seed)) {
    throw ContainmentError("extend_basis: seed is not contained in the subspace");
  }
  std::vector<Vector> out;
  Subspace current = seed;
  for (std::size_t r = 0; r < inside.dim() && current.dim() < inside.dim(); ++r) {
    Vector v = inside.basis().row(r);
    if (current.contains(v)) continue;
    current = sum(current, Subspace::span(inside.field(), inside.ambient(), {v}));
    out.push_back(std::move(v));
  }
  return out;
}

Subspace sum_all(PrimeField field, std::size_t ambient,
                 std::span<const Subspace> spaces) {
  Matrix stacked(field, 0, ambient);
  for (const Subspace& s : spaces) {
    if (s.ambient() != ambient || !(s.field() == field)) {
      throw DimensionMismatch("sum_all: mixed ambient spaces");
    }
    stacked = stacked.vstack(s.basis());
  }
  return Subspace::row_space(stacked);
}

}  // namespace cddembed
