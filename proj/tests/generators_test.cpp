#include <gtest/gtest.h>

#include <bit>
#include <functional>
#include <numeric>

#include "cddembed/error.hpp"
#include "cddembed/generators.hpp"
#include "cddembed/io.hpp"
#include "oracles.hpp"

namespace cddembed {
namespace {

using testing::RankOracle;

TEST(SplitMix64Test, ReferenceSequence) {
  // Published reference outputs for seed 1234567.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ull);
  EXPECT_EQ(rng.next(), 3203168211198807973ull);
  EXPECT_EQ(rng.next(), 9817491932198370423ull);
}

TEST(UniformTest, UOneThreeOverGf2) {
  const RepresentedMatroid m = uniform(1, 3, 2);
  ASSERT_EQ(m.rank(), 1u);
  EXPECT_EQ(m.matrix().entries(), (std::vector<Residue>{1, 1, 1}));
}

TEST(UniformTest, UTwoFourOverGf5) {
  const RepresentedMatroid m = uniform(2, 4, 5);
  RankOracle o(m);
  std::size_t pairs = 0;
  for (std::uint32_t s = 0; s < 16; ++s) {
    if (std::popcount(s) == 2 && o.rank(s) == 2) ++pairs;
  }
  EXPECT_EQ(pairs, 6u);
}

TEST(UniformTest, UThreeThreeIsIdentityMatroid) {
  const RepresentedMatroid m = uniform(3, 3, 2);
  EXPECT_EQ(m.rank(), 3u);
  EXPECT_EQ(testing::brute_basis_count(m), 1u);
}

TEST(UniformTest, RepresentabilityGuard) {
  EXPECT_THROW(uniform(2, 4, 2), RepresentabilityError);
  EXPECT_NO_THROW(uniform(2, 3, 2));
  EXPECT_NO_THROW(uniform(1, 9, 2));
  // Every 3-subset of U_{3,6} over GF(5) is a basis.
  EXPECT_EQ(testing::brute_basis_count(uniform(3, 6, 5)), 20u);
}

TEST(GraphicTest, RankIsVerticesMinusComponents) {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    MultiGraph g;
    g.vertices = 2 + rng.below(5);
    const std::size_t m = 1 + rng.below(8);
    for (std::size_t i = 0; i < m; ++i) {
      g.add_edge(rng.below(g.vertices), rng.below(g.vertices), "e" + std::to_string(i + 1));
    }
    std::vector<std::size_t> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::size_t comps = g.vertices;
    for (const auto& e : g.edges) {
      const std::size_t a = find(e.u), b = find(e.v);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    for (std::uint32_t p : {2u, 3u}) {
      EXPECT_EQ(graphic(g, p).rank(), g.vertices - comps) << "trial " << trial;
    }
  }
}

TEST(GraphicTest, TriangleBasesAndLoops) {
  const MultiGraph g = parse_edge_list("3\n0 1 a\n1 2 b\n2 0 c\n1 1 loop\n");
  const RepresentedMatroid m = graphic(g, 3);
  EXPECT_EQ(testing::brute_basis_count(m), 3u);
  EXPECT_TRUE(m.is_loop(m.index_of("loop")));
  EXPECT_THROW(parse_edge_list("2\n0 5\n"), Error);
}

TEST(FatCycleTest, RankMatchesGraph) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const RepresentedMatroid m = fat_cycle(n).matroid;
    ASSERT_EQ(m.size(), n * n);
    EXPECT_EQ(m.labels()[n], "e2.1");
    RankOracle o(m);
    for (std::uint32_t s = 0; s < (1u << m.size()); s += 1 + n) {
      EXPECT_EQ(o.rank(s), testing::fat_cycle_rank_by_graph(n, s)) << "n=" << n;
    }
  }
  EXPECT_THROW(fat_cycle(1), Error);
}

TEST(RandomInstanceTest, Deterministic) {
  const RandomParams p{4, 8, 3, 60};
  EXPECT_EQ(random_instance(17, p).matrix().entries(), random_instance(17, p).matrix().entries());
  EXPECT_NE(random_instance(17, p).matrix().entries(), random_instance(18, p).matrix().entries());
}

TEST(RandomInstanceTest, FourByEightOverGf3UsuallyFullRank) {
  // A uniform 4x8 matrix over GF(3) has full row rank with probability
  // prod_{i=0..3} (1 - 3^{i-8}) > 0.98; at density 60% it stays high.
  const RandomParams p{4, 8, 3, 60};
  std::size_t full = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    if (random_instance(seed, p).rank() == 4) ++full;
  }
  EXPECT_GE(full, 90u);
}

TEST(ManifestTest, FileMatchesBuiltin) {
  const auto entries =
      parse_manifest(read_text_file(std::string(CDDEMBED_TEST_DATA) + "/corpus_manifest.txt"));
  const auto& builtin = builtin_manifest();
  ASSERT_EQ(entries.size(), builtin.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    EXPECT_EQ(entries[i].name, builtin[i].name);
    EXPECT_EQ(entries[i].first, builtin[i].first);
    EXPECT_EQ(entries[i].count, builtin[i].count);
  }
  EXPECT_EQ(manifest_seeds(entries, "corpus").size(), 60u);
  EXPECT_EQ(manifest_seeds(entries, "subspaces").front(), 1000u);
}

TEST(RandomTreeTest, LeavesBijectAndInnerDegreeAtLeastTwo) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const RepresentedMatroid m = random_instance(seed, corpus_params(seed));
    const DecompositionTree t = random_tree(m, seed);
    auto leaves = t.elements();
    std::sort(leaves.begin(), leaves.end());
    auto labels = m.labels();
    std::sort(labels.begin(), labels.end());
    EXPECT_EQ(leaves, labels);
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (!t.node(v).is_leaf()) {
        EXPECT_GE(t.neighbors(v).size(), 2u);
      }
    }
  }
}

}  // namespace
}  // namespace cddembed
