#pragma once

#include <cstdint>

namespace cddembed {

using Residue = std::uint32_t;

// The prime field GF(p), 2 <= p < 2^16. Elements are canonical residues in
// [0, p); products of two residues fit in 32 bits.
class PrimeField {
 public:
  // Throws Error if p is not a prime in range.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Residue reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const { return (a * b) % p_; }
  // Multiplicative inverse by the extended Euclidean algorithm. a != 0.
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace cddembed
