#include "cddembed/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "cddembed/connectivity.hpp"
#include "cddembed/error.hpp"

namespace cddembed {

DecompositionTree DecompositionTree::single_leaf(std::string element) {
  DecompositionTree t;
  TreeNode n;
  n.element = std::move(element);
  t.nodes_.push_back(std::move(n));
  return t;
}

std::size_t DecompositionTree::add_inner(std::string name, std::optional<std::size_t> parent) {
  if (nodes_.empty() == parent.has_value()) {
    throw DecompositionError("only the first node may lack a parent");
  }
  TreeNode n;
  n.name = std::move(name);
  n.parent = parent;
  nodes_.push_back(std::move(n));
  const std::size_t id = nodes_.size() - 1;
  if (parent) nodes_.at(*parent).children.push_back(id);
  return id;
}

std::size_t DecompositionTree::add_leaf(std::string element, std::size_t parent) {
  if (element.empty()) throw DecompositionError("leaf without an element label");
  if (nodes_.at(parent).is_leaf()) throw DecompositionError("cannot attach below a leaf");
  TreeNode n;
  n.element = std::move(element);
  n.parent = parent;
  nodes_.push_back(std::move(n));
  const std::size_t id = nodes_.size() - 1;
  nodes_[parent].children.push_back(id);
  return id;
}

DecompositionTree DecompositionTree::from_sexpr(const SExpr& e) {
  DecompositionTree t;
  std::function<void(const SExpr&, std::optional<std::size_t>)> visit =
      [&](const SExpr& x, std::optional<std::size_t> parent) {
        if (!x.is_list) {
          if (!parent) {
            t = single_leaf(x.atom);
            return;
          }
          t.add_leaf(x.atom, *parent);
          return;
        }
        if (x.items.empty()) {
          throw ParseError("empty inner vertex '()'", x.line, x.column);
        }
        std::size_t first = 0;
        std::string name;
        if (!x.items[0].is_list) {
          name = x.items[0].atom;
          first = 1;
        }
        if (first == x.items.size()) {
          throw ParseError("inner vertex '" + name + "' has no children", x.line, x.column);
        }
        const std::size_t id = t.add_inner(name, parent);
        if (name.empty()) t.nodes_[id].name = "v" + std::to_string(id);
        for (std::size_t i = first; i < x.items.size(); ++i) visit(x.items[i], id);
      };
  visit(e, std::nullopt);
  return t;
}

DecompositionTree DecompositionTree::parse(std::string_view text) {
  return from_sexpr(parse_sexpr(text));
}

std::vector<std::string> DecompositionTree::leaf_elements(std::size_t id) const {
  std::vector<std::string> out;
  std::function<void(std::size_t)> visit = [&](std::size_t x) {
    const TreeNode& n = nodes_.at(x);
    if (n.is_leaf()) {
      out.push_back(n.element);
      return;
    }
    for (std::size_t c : n.children) visit(c);
  };
  visit(id);
  return out;
}

std::vector<std::size_t> DecompositionTree::neighbors(std::size_t id) const {
  std::vector<std::size_t> out;
  const TreeNode& n = nodes_.at(id);
  if (n.parent) out.push_back(*n.parent);
  out.insert(out.end(), n.children.begin(), n.children.end());
  return out;
}

std::size_t DecompositionTree::depth() const { return eccentricity(root()); }

std::size_t DecompositionTree::eccentricity(std::size_t id) const {
  std::vector<std::size_t> dist(nodes_.size(), SIZE_MAX);
  std::queue<std::size_t> q;
  dist[id] = 0;
  q.push(id);
  std::size_t best = 0;
  while (!q.empty()) {
    const std::size_t x = q.front();
    q.pop();
    best = std::max(best, dist[x]);
    for (std::size_t y : neighbors(x)) {
      if (dist[y] == SIZE_MAX) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return best;
}

std::size_t DecompositionTree::radius() const {
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < nodes_.size(); ++i) best = std::min(best, eccentricity(i));
  return best;
}

DecompositionTree DecompositionTree::subtree(std::size_t id) const {
  DecompositionTree t;
  std::function<void(std::size_t, std::optional<std::size_t>)> copy =
      [&](std::size_t x, std::optional<std::size_t> parent) {
        const TreeNode& n = nodes_.at(x);
        if (n.is_leaf()) {
          if (parent) {
            t.add_leaf(n.element, *parent);
          } else {
            t = single_leaf(n.element);
          }
          return;
        }
        const std::size_t nid = t.add_inner(n.name, parent);
        for (std::size_t c : n.children) copy(c, nid);
      };
  copy(id, std::nullopt);
  return t;
}

DecompositionTree DecompositionTree::rerooted(std::size_t id) const {
  DecompositionTree t;
  std::function<void(std::size_t, std::optional<std::size_t>, std::optional<std::size_t>)>
      copy = [&](std::size_t x, std::optional<std::size_t> from,
                 std::optional<std::size_t> parent) {
        const TreeNode& n = nodes_.at(x);
        if (n.is_leaf()) {
          if (parent) {
            t.add_leaf(n.element, *parent);
          } else {
            t = single_leaf(n.element);
          }
          return;
        }
        const std::size_t nid = t.add_inner(n.name, parent);
        for (std::size_t y : neighbors(x)) {
          if (from && y == *from) continue;
          copy(y, x, nid);
        }
      };
  copy(id, std::nullopt, std::nullopt);
  return t;
}

SExpr DecompositionTree::to_sexpr_tree() const {
  std::function<SExpr(std::size_t)> build = [&](std::size_t x) {
    const TreeNode& n = nodes_.at(x);
    SExpr e;
    if (n.is_leaf()) {
      e.atom = n.element;
      return e;
    }
    e.is_list = true;
    SExpr name;
    name.atom = n.name.empty() ? "v" + std::to_string(x) : n.name;
    e.items.push_back(std::move(name));
    for (std::size_t c : n.children) e.items.push_back(build(c));
    return e;
  };
  return build(root());
}

std::string DecompositionTree::to_string() const { return format_sexpr(to_sexpr_tree()); }

namespace {

// Leaf elements must be exactly the ground set.
void require_leaf_bijection(const RepresentedMatroid& m, const DecompositionTree& t) {
  std::vector<std::string> leaves = t.elements();
  std::set<std::string> seen;
  for (const std::string& e : leaves) {
    if (!m.has(e)) throw DecompositionError("leaf '" + e + "' is not an element of the matroid");
    if (!seen.insert(e).second) throw DecompositionError("element '" + e + "' labels two leaves");
  }
  if (seen.size() != m.size()) {
    for (const std::string& l : m.labels()) {
      if (!seen.contains(l)) throw DecompositionError("element '" + l + "' has no leaf");
    }
  }
}

ElementSet to_set(const RepresentedMatroid& m, const std::vector<std::string>& labels) {
  return m.indices_of(labels);
}

}  // namespace

DecompositionReport validate_rooted(const RepresentedMatroid& m, const DecompositionTree& t,
                                    std::size_t d, std::size_t r) {
  require_leaf_bijection(m, t);
  DecompositionReport report;
  report.measured_depth = t.depth();
  report.depth_ok = report.measured_depth <= d;
  report.degenerate = t.size() == 1;
  for (std::size_t v = 0; v < t.size(); ++v) {
    const TreeNode& n = t.node(v);
    if (n.is_leaf()) continue;
    std::vector<ElementSet> blocks;
    for (std::size_t c : n.children) blocks.push_back(to_set(m, t.leaf_elements(c)));
    const std::size_t value = lambda_star(m, blocks);
    report.max_lambda = std::max(report.max_lambda, value);
    if (value > r) report.violations.push_back({v, n.name, value});
  }
  report.valid = report.depth_ok && report.violations.empty();
  return report;
}

DecompositionReport validate_unrooted(const RepresentedMatroid& m, const DecompositionTree& t,
                                      std::size_t d, std::size_t r) {
  require_leaf_bijection(m, t);
  DecompositionReport report;
  report.degenerate = t.size() == 1;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (!t.node(v).is_leaf() && t.neighbors(v).size() < 2) {
      throw DecompositionError("inner vertex '" + t.node(v).name +
                               "' has degree 1 and would be a leaf without an element");
    }
  }
  report.measured_depth = t.radius();
  report.depth_ok = report.measured_depth <= d;
  const ElementSet all = m.ground();
  for (std::size_t v = 0; v < t.size(); ++v) {
    const TreeNode& n = t.node(v);
    if (n.is_leaf()) continue;
    std::vector<ElementSet> blocks;
    ElementSet below;
    for (std::size_t c : n.children) {
      ElementSet b = to_set(m, t.leaf_elements(c));
      below.insert(below.end(), b.begin(), b.end());
      blocks.push_back(std::move(b));
    }
    if (n.parent) {
      std::sort(below.begin(), below.end());
      ElementSet rest;
      std::set_difference(all.begin(), all.end(), below.begin(), below.end(),
                          std::back_inserter(rest));
      blocks.insert(blocks.begin(), std::move(rest));
    }
    const std::size_t value = lambda_star(m, blocks);
    report.max_lambda = std::max(report.max_lambda, value);
    if (value > r) report.violations.push_back({v, n.name, value});
  }
  report.valid = report.depth_ok && report.violations.empty();
  return report;
}

DecompositionTree root_decomposition(const RepresentedMatroid& m, const DecompositionTree& t,
                                     std::size_t d, std::size_t r) {
  DecompositionReport report = validate_unrooted(m, t, d, r);
  if (!report.valid) {
    throw DecompositionError("root_decomposition: input is not an unrooted (" +
                             std::to_string(d) + "," + std::to_string(r) +
                             ")-decomposition");
  }
  if (t.size() == 1) return t;
  std::size_t best = SIZE_MAX;
  std::size_t center = 0;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t.node(v).is_leaf()) continue;
    const std::size_t ecc = t.eccentricity(v);
    if (ecc < best) {
      best = ecc;
      center = v;
    }
  }
  return t.rerooted(center);
}

namespace {

using Mask = std::uint32_t;

// Ranks of every subset of a matroid with at most 16 elements.
class RankTable {
 public:
  explicit RankTable(const RepresentedMatroid& m) : ranks_(std::size_t{1} << m.size()) {
    ElementSet cols;
    for (Mask s = 0; s < ranks_.size(); ++s) {
      cols.clear();
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (s >> i & 1) cols.push_back(i);
      }
      ranks_[s] = static_cast<std::uint8_t>(m.rank_of(cols));
    }
  }
  std::size_t operator()(Mask s) const { return ranks_[s]; }

  std::size_t lambda_star(const std::vector<Mask>& blocks) const {
    const std::size_t k = blocks.size();
    if (k <= 1) return 0;
    Mask all = 0;
    for (Mask b : blocks) all |= b;
    const std::size_t total = ranks_[all];
    std::size_t best = 0;
    for (Mask sel = 0; sel < (Mask{1} << (k - 1)); ++sel) {
      Mask left = blocks[0];
      for (std::size_t i = 1; i < k; ++i) {
        if (sel >> (i - 1) & 1) left |= blocks[i];
      }
      best = std::max(best, ranks_[left] + ranks_[all & ~left] - total);
    }
    return best;
  }

 private:
  std::vector<std::uint8_t> ranks_;
};

// Calls visit(blocks) for every partition of the set bits of s into at least
// two blocks, in lexicographic order of restricted growth strings. Stops when
// visit returns true.
template <typename Visit>
bool for_each_partition(Mask s, Visit&& visit) {
  std::vector<std::size_t> elems;
  for (std::size_t i = 0; i < 32; ++i) {
    if (s >> i & 1) elems.push_back(i);
  }
  const std::size_t n = elems.size();
  std::vector<std::size_t> rgs(n, 0);
  std::vector<Mask> blocks;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                            std::size_t used) -> bool {
    if (i == n) {
      if (used < 2) return false;
      blocks.assign(used, 0);
      for (std::size_t j = 0; j < n; ++j) blocks[rgs[j]] |= Mask{1} << elems[j];
      return visit(blocks);
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      rgs[i] = b;
      if (rec(i + 1, std::max(used, b + 1))) return true;
    }
    return false;
  };
  return rec(0, 0);
}

// A subtree plan: either a single element or a list of child blocks.
struct Plan {
  bool feasible = false;
  std::vector<Mask> blocks;  // empty for a leaf
};

class RootedSearch {
 public:
  RootedSearch(const RankTable& ranks, Mask ground, std::size_t r, bool unrooted)
      : ranks_(ranks), ground_(ground), r_(r), unrooted_(unrooted) {}

  const Plan& solve(Mask s, std::size_t budget) {
    const auto key = std::pair{s, budget};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Plan plan;
    if (std::popcount(s) == 1) {
      plan.feasible = true;
    } else if (budget > 0) {
      auto try_blocks = [&](const std::vector<Mask>& blocks) {
        if (budget == 1) {
          for (Mask b : blocks) {
            if (std::popcount(b) > 1) return false;
          }
        }
        std::vector<Mask> around = blocks;
        if (unrooted_ && s != ground_) around.push_back(ground_ & ~s);
        if (ranks_.lambda_star(around) > r_) return false;
        for (Mask b : blocks) {
          if (!solve(b, budget - 1).feasible) return false;
        }
        plan.feasible = true;
        plan.blocks = blocks;
        return true;
      };
      if (budget == 1) {
        std::vector<Mask> singles;
        for (std::size_t i = 0; i < 32; ++i) {
          if (s >> i & 1) singles.push_back(Mask{1} << i);
        }
        try_blocks(singles);
      } else {
        for_each_partition(s, try_blocks);
      }
    }
    return memo_.emplace(key, std::move(plan)).first->second;
  }

  void build(DecompositionTree& t, const RepresentedMatroid& m, Mask s, std::size_t budget,
             std::optional<std::size_t> parent, std::size_t& counter) {
    const Plan& plan = solve(s, budget);
    if (plan.blocks.empty()) {
      const std::string& label = m.labels()[std::countr_zero(s)];
      if (parent) {
        t.add_leaf(label, *parent);
      } else {
        t = DecompositionTree::single_leaf(label);
      }
      return;
    }
    const std::size_t id =
        t.add_inner(parent ? "v" + std::to_string(++counter) : "root", parent);
    const std::vector<Mask> blocks = plan.blocks;
    for (Mask b : blocks) build(t, m, b, budget - 1, id, counter);
  }

 private:
  const RankTable& ranks_;
  Mask ground_;
  std::size_t r_;
  bool unrooted_;
  std::map<std::pair<Mask, std::size_t>, Plan> memo_;
};

}  // namespace

std::optional<DecompositionTree> search_rooted(const RepresentedMatroid& m, std::size_t d,
                                               std::size_t r) {
  if (m.size() > kSearchGuard) {
    throw GuardExceeded("search_rooted: " + std::to_string(m.size()) +
                        " elements exceeds the cap of " + std::to_string(kSearchGuard));
  }
  if (m.size() == 0) return std::nullopt;
  const RankTable ranks(m);
  const Mask ground = static_cast<Mask>((std::uint64_t{1} << m.size()) - 1);
  RootedSearch search(ranks, ground, r, /*unrooted=*/false);
  if (!search.solve(ground, d).feasible) return std::nullopt;
  DecompositionTree t;
  std::size_t counter = 0;
  search.build(t, m, ground, d, std::nullopt, counter);
  return t;
}

BranchDepthResult branch_depth_oracle(const RepresentedMatroid& m) {
  if (m.size() > kBranchDepthGuard) {
    throw GuardExceeded("branch_depth_oracle: " + std::to_string(m.size()) +
                        " elements exceeds the cap of " + std::to_string(kBranchDepthGuard));
  }
  if (m.size() == 0) return {0, std::nullopt};
  if (m.size() == 1) return {1, DecompositionTree::single_leaf(m.labels()[0])};
  const RankTable ranks(m);
  const Mask ground = static_cast<Mask>((std::uint64_t{1} << m.size()) - 1);
  for (std::size_t k = 1;; ++k) {
    // Rooted at a center: depth <= k, every inner vertex has >= 2 children,
    // and lambda* at a non-root vertex includes the outside of its subtree.
    RootedSearch search(ranks, ground, k, /*unrooted=*/true);
    if (!search.solve(ground, k).feasible) continue;
    DecompositionTree t;
    std::size_t counter = 0;
    search.build(t, m, ground, k, std::nullopt, counter);
    return {k, std::move(t)};
  }
}

}  // namespace cddembed
