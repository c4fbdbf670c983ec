#pragma once

// Brute-force reference implementations. None of them calls the library's
// elimination code: independence is decided by trying every coefficient
// vector, spans are enumerated element by element.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "cddembed/depth.hpp"
#include "cddembed/matroid.hpp"

namespace cddembed::testing {

// True when no nontrivial combination of the columns is zero.
bool brute_independent(const std::vector<Vector>& columns, std::uint32_t p);

// Number of distinct vectors in the span, enumerated by closure.
std::size_t brute_span_size(const std::vector<Vector>& vectors, std::uint32_t p,
                            std::size_t ambient);
// log_p of brute_span_size.
std::size_t brute_span_dim(const std::vector<Vector>& vectors, std::uint32_t p,
                           std::size_t ambient);

// Rank function of a represented matroid on bitmasks, memoized.
class RankOracle {
 public:
  explicit RankOracle(const RepresentedMatroid& m);
  std::size_t size() const { return columns_.size(); }
  std::size_t rank(std::uint32_t mask);

 private:
  std::vector<Vector> columns_;
  std::uint32_t p_;
  std::map<std::uint32_t, std::size_t> memo_;
};

std::size_t brute_basis_count(const RepresentedMatroid& m);

// Components as minimal nonempty separators, on bitmasks.
std::vector<std::uint32_t> separator_components(RankOracle& oracle, std::uint32_t ground,
                                                std::uint32_t contracted);

// Depth by the recursive definition on (remaining, contracted) bitmasks.
std::size_t naive_depth(const RepresentedMatroid& m, DepthMode mode);

// Fat cycle as a multigraph-free description: n classes of n parallel
// elements forming a cycle. Graphic rank computed by union-find.
std::size_t fat_cycle_rank_by_graph(std::size_t n, std::uint32_t mask);

}  // namespace cddembed::testing
