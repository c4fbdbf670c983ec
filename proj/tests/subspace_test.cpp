#include <gtest/gtest.h>

#include "cddembed/error.hpp"
#include "cddembed/generators.hpp"
#include "cddembed/subspace.hpp"
#include "oracles.hpp"

namespace cddembed {
namespace {

using testing::brute_span_dim;

std::vector<Vector> random_vectors(SplitMix64& rng, std::size_t count, std::size_t n,
                                   std::uint32_t p) {
  std::vector<Vector> out(count, Vector(n));
  for (Vector& v : out) {
    for (Residue& x : v) x = static_cast<Residue>(rng.below(p));
  }
  return out;
}

Subspace span(const PrimeField& f, std::size_t n, const std::vector<Vector>& vs) {
  return Subspace::row_space(Matrix::from_row_vectors(f, n, vs));
}

TEST(SubspaceTest, CanonicalFormIsBasisIndependent) {
  const PrimeField f(5);
  const Subspace a = span(f, 3, {{1, 2, 0}, {0, 1, 1}});
  const Subspace b = span(f, 3, {{1, 3, 1}, {2, 4, 0}, {3, 3, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_NE(a, span(f, 3, {{1, 3, 1}, {3, 0, 2}}));
}

TEST(SubspaceTest, TwoIdenticalLinesIntersectInTheLine) {
  const PrimeField f(2);
  const Subspace line = span(f, 3, {{1, 1, 0}});
  EXPECT_EQ(intersect(line, line), line);
  EXPECT_EQ(sum(line, line), line);
}

TEST(SubspaceTest, ZassenhausMatchesEnumeration) {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[trial % 3];
    const std::size_t n = 2 + trial % 3;
    const PrimeField f(p);
    const auto xv = random_vectors(rng, 1 + trial % 3, n, p);
    const auto yv = random_vectors(rng, 1 + (trial / 3) % 3, n, p);
    const Subspace x = span(f, n, xv), y = span(f, n, yv);
    const SumAndIntersection si = zassenhaus(x, y);
    auto all = xv;
    all.insert(all.end(), yv.begin(), yv.end());
    EXPECT_EQ(si.sum.dim(), brute_span_dim(all, p, n));
    // Grassmann's identity with dims from enumeration only.
    EXPECT_EQ(si.intersection.dim(),
              brute_span_dim(xv, p, n) + brute_span_dim(yv, p, n) - brute_span_dim(all, p, n));
    EXPECT_TRUE(x.contains(si.intersection));
    EXPECT_TRUE(y.contains(si.intersection));
    EXPECT_TRUE(si.sum.contains(x));
    EXPECT_EQ(si.intersection, intersect(y, x));
  }
}

TEST(SubspaceTest, QuotientDimension) {
  const PrimeField f(3);
  const Subspace x = span(f, 3, {{1, 0, 0}, {0, 1, 0}});
  const Subspace a = span(f, 3, {{1, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(quotient_dim(x, a), 1u);
  EXPECT_EQ(quotient_dim(x, Subspace(f, 3)), 2u);
  EXPECT_EQ(quotient_dim(x, Subspace::full(f, 3)), 0u);
}

TEST(SubspaceTest, ExtendBasisCompletesInside) {
  const PrimeField f(5);
  const Subspace inside = span(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
  const Subspace seed = span(f, 4, {{1, 1, 0, 0}});
  const std::vector<Vector> ext = extend_basis(inside, seed);
  EXPECT_EQ(ext.size(), 2u);
  std::vector<Vector> all = seed.basis_vectors();
  all.insert(all.end(), ext.begin(), ext.end());
  EXPECT_EQ(span(f, 4, all), inside);
}

TEST(SubspaceTest, MixedAmbientThrows) {
  const PrimeField f(2);
  EXPECT_THROW(sum(Subspace(f, 2), Subspace(f, 3)), DimensionMismatch);
  EXPECT_THROW(intersect(Subspace(f, 2), Subspace(PrimeField(3), 2)), DimensionMismatch);
}

}  // namespace
}  // namespace cddembed
