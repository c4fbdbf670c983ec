#include <gtest/gtest.h>

#include <bit>

#include "cddembed/connectivity.hpp"
#include "cddembed/decomposition.hpp"
#include "cddembed/depth.hpp"
#include "cddembed/error.hpp"
#include "cddembed/generators.hpp"
#include "oracles.hpp"

namespace cddembed {
namespace {

using testing::RankOracle;

// Max over inner vertices of λ* over the leaf sets of the components of
// T - v, computed by a tree walk and the brute rank oracle.
std::size_t unrooted_width(const RepresentedMatroid& m, const DecompositionTree& t) {
  RankOracle o(m);
  const std::uint32_t all = (1u << m.size()) - 1;
  std::size_t best = 0;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t.node(v).is_leaf()) continue;
    std::vector<std::uint32_t> blocks;
    for (std::size_t start : t.neighbors(v)) {
      std::uint32_t mask = 0;
      std::vector<std::pair<std::size_t, std::size_t>> stack = {{start, v}};
      while (!stack.empty()) {
        auto [u, from] = stack.back();
        stack.pop_back();
        if (t.node(u).is_leaf()) mask |= 1u << m.index_of(t.node(u).element);
        for (std::size_t w : t.neighbors(u)) {
          if (w != from) stack.push_back({w, u});
        }
      }
      blocks.push_back(mask);
    }
    for (std::uint32_t pick = 0; pick < (1u << blocks.size()); ++pick) {
      std::uint32_t x = 0;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (pick >> i & 1) x |= blocks[i];
      }
      best = std::max(best, o.rank(x) + o.rank(all & ~x) - o.rank(all));
    }
  }
  return best;
}

TEST(DecompositionTreeTest, ParseDepthRadius) {
  const DecompositionTree t = DecompositionTree::parse("(root (a x y) (b z (c w v)))");
  EXPECT_EQ(t.depth(), 3u);
  EXPECT_EQ(t.radius(), 3u);  // root and b both reach some leaf in 3 steps
  EXPECT_EQ(t.eccentricity(t.root()), 3u);
  EXPECT_EQ(t.elements(), (std::vector<std::string>{"x", "y", "z", "w", "v"}));
  EXPECT_EQ(DecompositionTree::parse(t.to_string()).to_string(), t.to_string());
  EXPECT_THROW(validate_rooted(uniform(1, 2, 2), DecompositionTree::parse("(root e1 e1)"), 1, 1),
               DecompositionError);
}

TEST(DecompositionTest, FatCycleNaturalTreeIsRootedTwoOne) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const FatCycle fc = fat_cycle(n);
    EXPECT_EQ(fc.matroid.size(), n * n);
    const DecompositionReport ok = validate_rooted(fc.matroid, fc.tree, 2, 1);
    EXPECT_TRUE(ok.valid) << "n=" << n;
    EXPECT_EQ(ok.max_lambda, 1u);
    EXPECT_FALSE(validate_rooted(fc.matroid, fc.tree, 1, 1).valid);
    const DecompositionReport tight = validate_rooted(fc.matroid, fc.tree, 2, 0);
    EXPECT_FALSE(tight.valid);
    EXPECT_FALSE(tight.violations.empty());
  }
}

TEST(DecompositionTest, LeafMismatchThrows) {
  const RepresentedMatroid m = uniform(1, 3, 2);
  EXPECT_THROW(validate_rooted(m, DecompositionTree::parse("(r e1 e2)"), 1, 1),
               DecompositionError);
  EXPECT_THROW(validate_unrooted(m, DecompositionTree::parse("(r e1 e2 e9)"), 1, 1),
               DecompositionError);
}

TEST(DecompositionTest, UnrootedWidthMatchesTreeWalk) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const RepresentedMatroid m = random_instance(seed, corpus_params(seed));
    const DecompositionTree t = random_tree(m, 9000 + seed);
    const std::size_t width = unrooted_width(m, t);
    const DecompositionReport rep = validate_unrooted(m, t, t.radius(), width);
    EXPECT_TRUE(rep.valid) << "seed " << seed;
    EXPECT_EQ(rep.max_lambda, width);
    if (width > 0) {
      EXPECT_FALSE(validate_unrooted(m, t, t.radius(), width - 1).valid);
    }
  }
}

TEST(DecompositionTest, RootingPreservesValidity) {
  std::size_t rooted = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const RepresentedMatroid m = random_instance(seed, corpus_params(seed));
    const DecompositionTree t = random_tree(m, 9000 + seed);
    const std::size_t d = t.radius();
    const std::size_t r = unrooted_width(m, t);
    const DecompositionTree rt = root_decomposition(m, t, d, r);
    EXPECT_TRUE(validate_rooted(m, rt, d, r).valid) << "seed " << seed;
    EXPECT_EQ(rt.depth(), d);
    ++rooted;
  }
  EXPECT_EQ(rooted, 40u);
}

TEST(DecompositionTest, RootingRejectsInvalidInput) {
  const FatCycle fc = fat_cycle(3);
  EXPECT_THROW(root_decomposition(fc.matroid, fc.tree, 1, 1), DecompositionError);
}

TEST(DecompositionTest, SearchFindsValidTrees) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    RandomParams p = corpus_params(seed);
    p.cols = std::min<std::size_t>(p.cols, 6);
    const RepresentedMatroid m = random_instance(seed, p);
    for (std::size_t d = 1; d <= 2; ++d) {
      for (std::size_t r = 0; r <= 2; ++r) {
        const auto t = search_rooted(m, d, r);
        if (t) {
          EXPECT_TRUE(validate_rooted(m, *t, d, r).valid);
        }
      }
    }
    // A star of singletons has λ* at most the rank.
    EXPECT_TRUE(search_rooted(m, 1, m.rank()).has_value());
  }
  EXPECT_THROW(search_rooted(fat_cycle(4).matroid, 2, 1), GuardExceeded);
}

TEST(BranchDepthTest, SmallValues) {
  EXPECT_EQ(branch_depth_oracle(uniform(1, 1, 2)).value, 1u);
  // A parallel pair and U_{2,4} both have a single-vertex tree of λ* 1 or 2.
  EXPECT_EQ(branch_depth_oracle(uniform(1, 2, 2)).value, 1u);
  EXPECT_EQ(branch_depth_oracle(uniform(2, 4, 3)).value, 2u);
  const BranchDepthResult bd = branch_depth_oracle(fat_cycle(2).matroid);
  ASSERT_TRUE(bd.witness.has_value());
  EXPECT_TRUE(validate_unrooted(fat_cycle(2).matroid, *bd.witness, bd.value, bd.value).valid);
}

TEST(BranchDepthTest, BoundedByCdd) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    RandomParams p = corpus_params(seed);
    p.cols = std::min<std::size_t>(p.cols, 7);
    const RepresentedMatroid m = random_instance(seed, p);
    EXPECT_LE(branch_depth_oracle(m).value, cdd(m).value) << "seed " << seed;
  }
}

}  // namespace
}  // namespace cddembed
