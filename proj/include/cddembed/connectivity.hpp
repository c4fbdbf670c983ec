#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cddembed/matroid.hpp"
#include "cddembed/subspace.hpp"

namespace cddembed {

// rank x + rank y - rank (x ∪ y). Throws OverlapError if x and y meet.
std::size_t lambda2(const RepresentedMatroid& m, const ElementSet& x,
                    const ElementSet& y);

// Connectivity of x against its complement.
std::size_t lambda1(const RepresentedMatroid& m, const ElementSet& x);

inline constexpr std::size_t kLambdaStarBlockGuard = 20;

// Maximum of lambda2 over all bipartitions of the blocks into two unions.
// Blocks must be pairwise disjoint; they need not cover the ground set.
std::size_t lambda_star(const RepresentedMatroid& m,
                        std::span<const ElementSet> blocks);

// The subspace version: max over I of dim Σ_I + dim Σ_rest - dim Σ_all.
std::size_t lambda_star_spaces(std::span<const Subspace> spaces);

// Column spans of the blocks, as subspaces of GF(p)^rank.
std::vector<Subspace> block_spans(const RepresentedMatroid& m,
                                  std::span<const ElementSet> blocks);

}  // namespace cddembed
