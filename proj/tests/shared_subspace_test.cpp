#include <gtest/gtest.h>

#include "cddembed/error.hpp"
#include "cddembed/generators.hpp"
#include "cddembed/shared_subspace.hpp"
#include "oracles.hpp"

namespace cddembed {
namespace {

using testing::brute_span_dim;

struct Family {
  std::uint32_t p;
  std::size_t n;
  std::vector<std::vector<Vector>> generators;
  std::vector<Subspace> spaces;
};

Family random_family(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Family f;
  f.p = std::vector<std::uint32_t>{2, 3, 5}[rng.below(3)];
  f.n = 2 + rng.below(4);
  const std::size_t k = 2 + rng.below(3);
  const PrimeField field(f.p);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vector> gens(1 + rng.below(3), Vector(f.n));
    for (Vector& v : gens) {
      for (Residue& x : v) x = static_cast<Residue>(rng.below(f.p));
    }
    f.spaces.push_back(Subspace::row_space(Matrix::from_row_vectors(field, f.n, gens)));
    f.generators.push_back(std::move(gens));
  }
  return f;
}

std::vector<Vector> concat(const std::vector<std::vector<Vector>>& parts, std::uint32_t pick) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (pick >> i & 1) out.insert(out.end(), parts[i].begin(), parts[i].end());
  }
  return out;
}

TEST(SharedSubspaceTest, IdenticalLines) {
  const PrimeField f(2);
  const Subspace line = Subspace::row_space(Matrix::from_rows(f, {{1, 0, 1}}));
  const SharedSubspaceResult r = shared_subspace({line, line});
  EXPECT_EQ(r.a, line);
  ASSERT_EQ(r.trace.steps.size(), 2u);
  EXPECT_EQ(r.trace.steps[0].kind, LemmaCase::kFirst);
}

TEST(SharedSubspaceTest, IndependentSpacesShareNothing) {
  const PrimeField f(3);
  std::vector<Subspace> spaces;
  for (std::size_t i = 0; i < 4; ++i) {
    spaces.push_back(Subspace::row_space(Matrix::from_row_vectors(f, 4, {vec::unit(4, i)})));
  }
  EXPECT_TRUE(shared_subspace(spaces).a.is_zero());
}

// Both inequalities with every dimension from span enumeration, never from
// the library's elimination.
TEST(SharedSubspaceTest, InequalitiesAgainstEnumeration) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const Family fam = random_family(seed);
    const SharedSubspaceResult r = shared_subspace(fam.spaces);
    const std::vector<Vector> a = r.a.basis_vectors();
    const std::size_t k = fam.spaces.size();
    const std::uint32_t all = (1u << k) - 1;
    const std::size_t dim_total = brute_span_dim(concat(fam.generators, all), fam.p, fam.n);
    std::size_t lambda_star = 0;
    for (std::uint32_t pick = 0; pick <= all; ++pick) {
      lambda_star = std::max(lambda_star,
                             brute_span_dim(concat(fam.generators, pick), fam.p, fam.n) +
                                 brute_span_dim(concat(fam.generators, all & ~pick), fam.p, fam.n) -
                                 dim_total);
    }
    const std::size_t dim_a = brute_span_dim(a, fam.p, fam.n);
    std::size_t quotient_sum = 0;
    for (const auto& gens : fam.generators) {
      auto with_a = gens;
      with_a.insert(with_a.end(), a.begin(), a.end());
      quotient_sum += brute_span_dim(with_a, fam.p, fam.n) - dim_a;
    }
    auto total_and_a = concat(fam.generators, all);
    total_and_a.insert(total_and_a.end(), a.begin(), a.end());
    EXPECT_EQ(brute_span_dim(total_and_a, fam.p, fam.n), dim_total) << "A escapes, seed " << seed;
    EXPECT_LE(dim_a, 3 * lambda_star) << "seed " << seed;
    EXPECT_LE(quotient_sum, dim_total) << "seed " << seed;
    // λ* ≤ dim A + (Σ dim X_i/A − dim (ΣX_i)/A).
    EXPECT_LE(lambda_star + (dim_total - dim_a), dim_a + quotient_sum) << "seed " << seed;

    const SharedSubspaceAudit audit = audit_shared_subspace(fam.spaces, r.a);
    EXPECT_TRUE(audit.ok());
    EXPECT_EQ(audit.lambda_star, lambda_star);
    EXPECT_EQ(audit.quotient_sum, quotient_sum);
  }
}

TEST(SharedSubspaceTest, TraceRecordsEveryStep) {
  std::size_t proper = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Family fam = random_family(seed);
    const SharedSubspaceResult r = shared_subspace(fam.spaces);
    ASSERT_EQ(r.trace.steps.size(), fam.spaces.size());
    std::size_t prev_a = 0, prev_lr = 0;
    for (const LemmaStep& s : r.trace.steps) {
      EXPECT_GE(s.dim_a, prev_a);  // A only grows
      EXPECT_GE(s.dim_lr, prev_lr);
      EXPECT_LE(s.dim_a, 3 * s.dim_lr);
      if (s.kind == LemmaCase::kProper) {
        ++proper;
        EXPECT_EQ(s.x.size(), s.gain);
        EXPECT_EQ(s.l_parts.size(), s.x.size());
        EXPECT_LE(s.gain, 2 * (s.dim_lr - prev_lr));
      }
      prev_a = s.dim_a;
      prev_lr = s.dim_lr;
    }
  }
  EXPECT_GT(proper, 0u);
}

TEST(SharedSubspaceTest, Errors) {
  EXPECT_THROW(shared_subspace({}), Error);
  EXPECT_THROW(shared_subspace({Subspace(PrimeField(2), 2), Subspace(PrimeField(2), 3)}),
               DimensionMismatch);
}

}  // namespace
}  // namespace cddembed
