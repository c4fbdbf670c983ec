#include <gtest/gtest.h>

#include "cddembed/connectivity.hpp"
#include "cddembed/error.hpp"
#include "cddembed/generators.hpp"
#include "oracles.hpp"

namespace cddembed {
namespace {

using testing::RankOracle;

std::uint32_t mask_of(const ElementSet& s) {
  std::uint32_t m = 0;
  for (std::size_t i : s) m |= 1u << i;
  return m;
}

std::size_t brute_lambda_star(RankOracle& o, const std::vector<std::uint32_t>& blocks) {
  std::uint32_t all = 0;
  for (std::uint32_t b : blocks) all |= b;
  std::size_t best = 0;
  for (std::uint32_t pick = 0; pick < (1u << blocks.size()); ++pick) {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (pick >> i & 1) x |= blocks[i];
    }
    best = std::max(best, o.rank(x) + o.rank(all & ~x) - o.rank(all));
  }
  return best;
}

TEST(ConnectivityTest, LambdaMatchesRankOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const RepresentedMatroid m = random_instance(seed, corpus_params(seed));
    RankOracle o(m);
    const std::uint32_t full = (1u << m.size()) - 1;
    SplitMix64 rng(seed);
    for (int trial = 0; trial < 10; ++trial) {
      const std::uint32_t x = static_cast<std::uint32_t>(rng.below(full + 1));
      const std::uint32_t y = static_cast<std::uint32_t>(rng.below(full + 1)) & ~x;
      ElementSet xs, ys;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (x >> i & 1) xs.push_back(i);
        if (y >> i & 1) ys.push_back(i);
      }
      EXPECT_EQ(lambda2(m, xs, ys), o.rank(x) + o.rank(y) - o.rank(x | y));
      EXPECT_EQ(lambda1(m, xs), o.rank(x) + o.rank(full & ~x) - o.rank(full));
    }
  }
}

TEST(ConnectivityTest, LambdaStarMatchesBruteForce) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const RepresentedMatroid m = random_instance(seed, corpus_params(seed));
    RankOracle o(m);
    // Blocks: consecutive runs of length 1-3, last element left out.
    std::vector<ElementSet> blocks;
    std::vector<std::uint32_t> masks;
    for (std::size_t i = 0; i + 1 < m.size();) {
      ElementSet b;
      for (std::size_t j = 0; j < 1 + (seed + i) % 3 && i + 1 < m.size(); ++j) b.push_back(i++);
      masks.push_back(mask_of(b));
      blocks.push_back(std::move(b));
    }
    EXPECT_EQ(lambda_star(m, blocks), brute_lambda_star(o, masks)) << "seed " << seed;
  }
}

TEST(ConnectivityTest, FatCycleClassPartitionHasLambdaStarOne) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const RepresentedMatroid m = fat_cycle(n).matroid;
    std::vector<ElementSet> blocks(n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t j = 1; j <= n; ++j) {
        blocks[c].push_back(m.index_of("e" + std::to_string(c + 1) + "." + std::to_string(j)));
      }
    }
    EXPECT_EQ(lambda_star(m, blocks), 1u) << "n=" << n;
  }
}

TEST(ConnectivityTest, SubspaceVersionAgrees) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const RepresentedMatroid m = random_instance(seed, corpus_params(seed));
    std::vector<ElementSet> blocks;
    for (std::size_t i = 0; i < m.size(); i += 2) {
      ElementSet b = {i};
      if (i + 1 < m.size()) b.push_back(i + 1);
      blocks.push_back(b);
    }
    const auto spaces = block_spans(m, blocks);
    EXPECT_EQ(lambda_star_spaces(spaces), lambda_star(m, blocks));
  }
}

TEST(ConnectivityTest, OverlappingBlocksThrow) {
  const RepresentedMatroid m = uniform(2, 4, 3);
  const std::vector<ElementSet> blocks = {{0, 1}, {1, 2}};
  EXPECT_THROW(lambda_star(m, blocks), OverlapError);
  EXPECT_THROW(lambda2(m, {0, 1}, {1}), OverlapError);
}

}  // namespace
}  // namespace cddembed
