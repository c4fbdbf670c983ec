#include <gtest/gtest.h>

#include "cddembed/decomposition.hpp"
#include "cddembed/depth.hpp"
#include "cddembed/embedding.hpp"
#include "cddembed/error.hpp"
#include "cddembed/generators.hpp"
#include "oracles.hpp"

namespace cddembed {
namespace {

TEST(EmbeddingBoundTest, Values) {
  EXPECT_EQ(embedding_bound(0, 3), 1u);
  EXPECT_EQ(embedding_bound(1, 1), 7u);
  EXPECT_EQ(embedding_bound(2, 1), 31u);
  EXPECT_EQ(embedding_bound(2, 2), 61u);
  EXPECT_EQ(embedding_bound(3, 1), 127u);
}

TEST(EmbeddingTest, FatCycleEndToEnd) {
  for (std::size_t n : {3, 4}) {
    const FatCycle fc = fat_cycle(n);
    const EmbeddingResult e = embed(fc.matroid, fc.tree, 2, 1);
    EXPECT_EQ(e.bound, 31u);
    EXPECT_LE(e.raw_depth, e.bound);
    // Every label of M survives in N.
    for (const std::string& l : fc.matroid.labels()) EXPECT_TRUE(e.n.has(l)) << l;
    const RepresentedMatroid back = apply_schedule(e.n, e.schedule);
    EXPECT_TRUE(same_matroid(back, fc.matroid));
    EXPECT_TRUE(same_representation(back, fc.matroid));
    EXPECT_EQ(testing::brute_basis_count(fc.matroid.reorder(back.labels())),
              basis_set(back).bases.size());
    EXPECT_LE(verify_certificate(e.n, e.certificate, DepthMode::kCdd), 31u);
    const EmbeddingVerification v = verify_embedding(e.n, e.schedule, e.certificate,
                                                     fc.matroid, 2, 1);
    EXPECT_TRUE(v.ok());
    EXPECT_TRUE(v.recovery_exact);
    ASSERT_FALSE(e.frames.empty());
    EXPECT_EQ(e.frames.front().path, "r");
    EXPECT_EQ(e.frames.front().k, n);
  }
}

TEST(EmbeddingTest, FiveIsSampledAboveEnumGuard) {
  const FatCycle fc = fat_cycle(5);
  const EmbeddingResult e = embed(fc.matroid, fc.tree, 2, 1);
  VerifyOptions o;
  o.max_enum = 16;
  const EmbeddingVerification v = verify_embedding(e.n, e.schedule, e.certificate, fc.matroid,
                                                   2, 1, o);
  EXPECT_TRUE(v.ok());
  EXPECT_FALSE(v.recovery_exact);
}

TEST(EmbeddingTest, RejectsInvalidTree) {
  const FatCycle fc = fat_cycle(3);
  EXPECT_THROW(embed(fc.matroid, fc.tree, 1, 1), DecompositionError);
  EXPECT_THROW(embed(fc.matroid, fc.tree, 2, 0), DecompositionError);
}

TEST(EmbeddingTest, SingleLeafTree) {
  const RepresentedMatroid m = uniform(1, 1, 2);
  const EmbeddingResult e = embed(m, DecompositionTree::single_leaf("e1"), 0, 0);
  EXPECT_TRUE(verify_embedding(e.n, e.schedule, e.certificate, m, 0, 0).ok());
}

// Small random instances: every decomposition search finds is embedded and
// the exact depth of N is never above the certificate value.
TEST(EmbeddingTest, RandomInstancesStayUnderBound) {
  std::size_t embedded = 0;
  for (std::uint64_t seed = 5000; seed < 5120; ++seed) {
    RandomParams p = corpus_params(seed);
    p.cols = std::min<std::size_t>(p.cols, 7);
    const RepresentedMatroid m = random_instance(seed, p);
    for (std::size_t d = 1; d <= 2; ++d) {
      const std::size_t r = 1;
      const auto t = search_rooted(m, d, r);
      if (!t) continue;
      const EmbeddingResult e = embed(m, *t, d, r);
      const EmbeddingVerification v = verify_embedding(e.n, e.schedule, e.certificate, m, d, r);
      EXPECT_TRUE(v.ok()) << "seed " << seed;
      if (e.n.size() <= 12) {
        EXPECT_LE(cdd(e.n).value, v.certificate_value) << "seed " << seed;
      }
      ++embedded;
      break;
    }
  }
  EXPECT_GE(embedded, 20u);
}

TEST(RankTransferTest, HoldsOnTopFrame) {
  const FatCycle fc = fat_cycle(3);
  // With d_A = 0 the sandwich says ranks are unchanged; compare M with itself.
  const RankTransferReport rep = check_rank_transfer(fc.matroid, fc.matroid,
                                                     {"e1.1", "e1.2", "e2.1"}, 0);
  EXPECT_TRUE(rep.ok) << rep.witness;
  EXPECT_EQ(rep.subsets_checked, 8u);
}

}  // namespace
}  // namespace cddembed
