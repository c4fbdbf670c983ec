#include "cddembed/connectivity.hpp"

#include <algorithm>
#include <string>

#include "cddembed/error.hpp"

namespace cddembed {
namespace {

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_disjoint(std::span<const ElementSet> blocks) {
  std::vector<std::size_t> all;
  for (const ElementSet& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw OverlapError("element sets are not disjoint");
  }
}

void require_block_count(std::size_t k) {
  if (k > kLambdaStarBlockGuard) {
    throw GuardExceeded("lambda_star over " + std::to_string(k) +
                        " blocks exceeds the cap of " +
                        std::to_string(kLambdaStarBlockGuard));
  }
}

}  // namespace

std::size_t lambda2(const RepresentedMatroid& m, const ElementSet& x,
                    const ElementSet& y) {
  const ElementSet both[] = {x, y};
  require_disjoint(both);
  ElementSet sx = x, sy = y;
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  return m.rank_of(sx) + m.rank_of(sy) - m.rank_of(set_union(sx, sy));
}

std::size_t lambda1(const RepresentedMatroid& m, const ElementSet& x) {
  ElementSet sx = x;
  std::sort(sx.begin(), sx.end());
  const ElementSet g = m.ground();
  ElementSet rest;
  std::set_difference(g.begin(), g.end(), sx.begin(), sx.end(), std::back_inserter(rest));
  return lambda2(m, sx, rest);
}

std::size_t lambda_star(const RepresentedMatroid& m,
                        std::span<const ElementSet> blocks) {
  const std::size_t k = blocks.size();
  require_block_count(k);
  require_disjoint(blocks);
  if (k <= 1) return 0;
  std::vector<std::size_t> block_rank(k);
  ElementSet all;
  for (std::size_t i = 0; i < k; ++i) {
    ElementSet b = blocks[i];
    std::sort(b.begin(), b.end());
    all = set_union(all, b);
  }
  const std::size_t total = m.rank_of(all);
  std::size_t best = 0;
  // Complement symmetry: only subsets containing block 0.
  for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
    ElementSet left, right;
    for (std::size_t i = 0; i < k; ++i) {
      const bool in_left = i == 0 || ((mask >> (i - 1)) & 1);
      ElementSet& side = in_left ? left : right;
      side.insert(side.end(), blocks[i].begin(), blocks[i].end());
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    best = std::max(best, m.rank_of(left) + m.rank_of(right) - total);
  }
  return best;
}

std::size_t lambda_star_spaces(std::span<const Subspace> spaces) {
  const std::size_t k = spaces.size();
  require_block_count(k);
  if (k <= 1) return 0;
  const PrimeField f = spaces[0].field();
  const std::size_t n = spaces[0].ambient();
  const std::size_t total = sum_all(f, n, spaces).dim();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
    std::vector<Subspace> left, right;
    for (std::size_t i = 0; i < k; ++i) {
      const bool in_left = i == 0 || ((mask >> (i - 1)) & 1);
      (in_left ? left : right).push_back(spaces[i]);
    }
    best = std::max(best, sum_all(f, n, left).dim() + sum_all(f, n, right).dim() - total);
  }
  return best;
}

std::vector<Subspace> block_spans(const RepresentedMatroid& m,
                                  std::span<const ElementSet> blocks) {
  std::vector<Subspace> out;
  out.reserve(blocks.size());
  for (const ElementSet& b : blocks) {
    std::vector<Vector> cols;
    for (std::size_t i : b) cols.push_back(m.column(i));
    out.push_back(Subspace::span(m.field(), m.rank(), cols));
  }
  return out;
}

}  // namespace cddembed
