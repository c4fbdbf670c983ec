#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace cddembed::testing {

bool brute_independent(const std::vector<Vector>& columns, std::uint32_t p) {
  const std::size_t k = columns.size();
  if (k == 0) return true;
  const std::size_t rows = columns[0].size();
  std::vector<std::uint32_t> coeff(k, 0);
  while (true) {
    std::size_t i = 0;
    while (i < k && ++coeff[i] == p) coeff[i++] = 0;
    if (i == k) return true;  // wrapped around: every nonzero vector tried
    bool zero = true;
    for (std::size_t r = 0; r < rows && zero; ++r) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < k; ++j) s += std::uint64_t{coeff[j]} * columns[j][r];
      zero = s % p == 0;
    }
    if (zero) return false;
  }
}

std::size_t brute_span_size(const std::vector<Vector>& vectors, std::uint32_t p,
                            std::size_t ambient) {
  std::set<Vector> span = {Vector(ambient, 0)};
  for (const Vector& v : vectors) {
    std::set<Vector> next;
    for (const Vector& w : span) {
      for (std::uint32_t c = 0; c < p; ++c) {
        Vector u(ambient);
        for (std::size_t i = 0; i < ambient; ++i) u[i] = (w[i] + c * v[i]) % p;
        next.insert(u);
      }
    }
    span = std::move(next);
  }
  return span.size();
}

std::size_t brute_span_dim(const std::vector<Vector>& vectors, std::uint32_t p,
                           std::size_t ambient) {
  std::size_t size = brute_span_size(vectors, p, ambient);
  std::size_t d = 0;
  while (size > 1) {
    size /= p;
    ++d;
  }
  return d;
}

RankOracle::RankOracle(const RepresentedMatroid& m) : p_(m.field().modulus()) {
  for (std::size_t i = 0; i < m.size(); ++i) columns_.push_back(m.column(i));
}

std::size_t RankOracle::rank(std::uint32_t mask) {
  if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
  // Greedy is exact for matroids.
  std::vector<Vector> chosen;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    chosen.push_back(columns_[i]);
    if (!brute_independent(chosen, p_)) chosen.pop_back();
  }
  return memo_[mask] = chosen.size();
}

std::size_t brute_basis_count(const RepresentedMatroid& m) {
  RankOracle oracle(m);
  const std::uint32_t full = (std::uint32_t{1} << m.size()) - 1;
  const std::size_t r = oracle.rank(full);
  std::size_t count = 0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == r && oracle.rank(s) == r) ++count;
  }
  return count;
}

namespace {

std::size_t minor_rank(RankOracle& o, std::uint32_t set, std::uint32_t contracted) {
  return o.rank(set | contracted) - o.rank(contracted);
}

}  // namespace

std::vector<std::uint32_t> separator_components(RankOracle& oracle, std::uint32_t ground,
                                                std::uint32_t contracted) {
  std::vector<std::uint32_t> out;
  while (ground) {
    const std::size_t total = minor_rank(oracle, ground, contracted);
    const std::uint32_t low = ground & (~ground + 1);
    std::uint32_t best = ground;
    for (std::uint32_t x = ground; x; x = (x - 1) & ground) {
      if (!(x & low)) continue;
      if (minor_rank(oracle, x, contracted) + minor_rank(oracle, ground & ~x, contracted) ==
              total &&
          std::popcount(x) < std::popcount(best)) {
        best = x;
      }
    }
    out.push_back(best);
    ground &= ~best;
  }
  return out;
}

std::size_t naive_depth(const RepresentedMatroid& m, DepthMode mode) {
  RankOracle oracle(m);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> memo;
  std::function<std::size_t(std::uint32_t, std::uint32_t)> go = [&](std::uint32_t ground,
                                                                     std::uint32_t c) {
    if (ground == 0) return std::size_t{0};
    if (std::popcount(ground) == 1) return std::size_t{1};
    if (auto it = memo.find({ground, c}); it != memo.end()) return it->second;
    const std::vector<std::uint32_t> parts = separator_components(oracle, ground, c);
    std::size_t best = SIZE_MAX;
    if (parts.size() > 1) {
      best = 0;
      for (std::uint32_t part : parts) best = std::max(best, go(part, c));
    } else {
      for (std::size_t e = 0; e < m.size(); ++e) {
        const std::uint32_t bit = std::uint32_t{1} << e;
        if (!(ground & bit)) continue;
        if (mode != DepthMode::kCd) best = std::min(best, 1 + go(ground & ~bit, c));
        if (mode != DepthMode::kDd && minor_rank(oracle, bit, c) == 1) {
          best = std::min(best, 1 + go(ground & ~bit, c | bit));
        }
      }
    }
    return memo[{ground, c}] = best;
  };
  return go(m.size() == 0 ? 0 : (std::uint32_t{1} << m.size()) - 1, 0);
}

std::size_t fat_cycle_rank_by_graph(std::size_t n, std::uint32_t mask) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t r = 0;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (!(mask >> i & 1)) continue;
    const std::size_t c = i / n;
    const std::size_t a = find(c), b = find((c + 1) % n);
    if (a != b) {
      parent[a] = b;
      ++r;
    }
  }
  return r;
}

}  // namespace cddembed::testing
