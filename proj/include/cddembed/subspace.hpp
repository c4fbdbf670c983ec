#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cddembed/matrix.hpp"

namespace cddembed {

// A subspace of GF(p)^n held as the RREF row basis without zero rows. Two
// subspaces are equal exactly when their bases are entrywise equal.
class Subspace {
 public:
  // The zero subspace of GF(p)^ambient.
  Subspace(PrimeField field, std::size_t ambient);

  // Throws DimensionMismatch if a vector has the wrong length.
  static Subspace span(PrimeField field, std::size_t ambient,
                       const std::vector<Vector>& vectors);
  // Row space of m.
  static Subspace row_space(const Matrix& m);
  // Span of the columns of m.
  static Subspace column_space(const Matrix& m);
  static Subspace full(PrimeField field, std::size_t ambient);

  const PrimeField& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(std::span<const Residue> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  explicit Subspace(Matrix canonical) : basis_(std::move(canonical)) {}

  Matrix basis_;
};

// Smallest subspace containing x and y.
Subspace sum(const Subspace& x, const Subspace& y);

// Zassenhaus: reduce [[X, X], [Y, 0]]. Rows whose left half vanishes carry a
// basis of the intersection in their right half.
Subspace intersect(const Subspace& x, const Subspace& y);

struct SumAndIntersection {
  Subspace sum;
  Subspace intersection;
};
SumAndIntersection zassenhaus(const Subspace& x, const Subspace& y);

// dim x - dim (x ∩ a); a need not lie inside x.
std::size_t quotient_dim(const Subspace& x, const Subspace& a);

// Greedy list of rows of inside's canonical basis that, together with seed,
// span inside. Throws ContainmentError unless seed ⊆ inside.
std::vector<Vector> extend_basis(const Subspace& inside, const Subspace& seed);

Subspace sum_all(PrimeField field, std::size_t ambient,
                 std::span<const Subspace> spaces);

}  // namespace cddembed
