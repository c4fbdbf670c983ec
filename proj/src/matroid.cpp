#include "cddembed/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "cddembed/error.hpp"

namespace cddembed {
namespace {

Matrix normalize(const Matrix& m) {
  if (rank(m) == m.rows()) return m;
  return row_space_basis(m);
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  return labels;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

RepresentedMatroid::RepresentedMatroid(Matrix matrix, std::vector<std::string> labels)
    : matrix_(normalize(matrix)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_ = default_labels(matrix_.cols());
  if (labels_.size() != matrix_.cols()) {
    throw DimensionMismatch("matroid has " + std::to_string(matrix_.cols()) +
                            " columns but " + std::to_string(labels_.size()) +
                            " labels");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw Error("empty element label");
    if (!index_.emplace(labels_[i], i).second) {
      throw Error("duplicate element label '" + labels_[i] + "'");
    }
  }
}

bool RepresentedMatroid::has(const std::string& label) const {
  return index_.contains(label);
}

std::size_t RepresentedMatroid::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownLabel(label);
  return it->second;
}

ElementSet RepresentedMatroid::indices_of(const std::vector<std::string>& labels) const {
  ElementSet out;
  out.reserve(labels.size());
  for (const std::string& l : labels) out.push_back(index_of(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet RepresentedMatroid::ground() const {
  ElementSet g(size());
  std::iota(g.begin(), g.end(), 0);
  return g;
}

std::vector<std::string> RepresentedMatroid::labels_of(const ElementSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (std::size_t i : set) out.push_back(labels_.at(i));
  return out;
}

bool RepresentedMatroid::is_loop(std::size_t i) const {
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    if (matrix_(r, i) != 0) return false;
  }
  return true;
}

std::size_t RepresentedMatroid::rank_of(const ElementSet& set) const {
  if (set.empty() || rank() == 0) return 0;
  for (std::size_t i : set) {
    if (i >= size()) throw Error("element index out of range");
  }
  return cddembed::rank(matrix_.select_columns(set));
}

std::size_t RepresentedMatroid::rank_of_labels(const std::vector<std::string>& labels) const {
  return rank_of(indices_of(labels));
}

RepresentedMatroid RepresentedMatroid::restrict_to(const ElementSet& set) const {
  std::vector<std::string> labels;
  labels.reserve(set.size());
  for (std::size_t i : set) labels.push_back(labels_.at(i));
  Matrix sub = matrix_.select_columns(set);
  return RepresentedMatroid(row_space_basis(sub), std::move(labels));
}

RepresentedMatroid RepresentedMatroid::delete_element(const std::string& label) const {
  const std::size_t e = index_of(label);
  ElementSet keep;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i != e) keep.push_back(i);
  }
  return restrict_to(keep);
}

RepresentedMatroid RepresentedMatroid::contract(const std::string& label) const {
  const std::size_t e = index_of(label);
  if (is_loop(e)) throw LoopContraction(label);
  const PrimeField& f = field();
  const std::size_t rows = matrix_.rows();
  const std::size_t cols = matrix_.cols();

  std::size_t pivot_row = 0;
  while (matrix_(pivot_row, e) == 0) ++pivot_row;
  Matrix work = matrix_;
  const Residue s = f.inv(work(pivot_row, e));
  for (std::size_t c = 0; c < cols; ++c) work.set(pivot_row, c, f.mul(work(pivot_row, c), s));
  for (std::size_t r = 0; r < rows; ++r) {
    if (r == pivot_row || work(r, e) == 0) continue;
    const Residue factor = work(r, e);
    for (std::size_t c = 0; c < cols; ++c) {
      work.set(r, c, f.sub(work(r, c), f.mul(factor, work(pivot_row, c))));
    }
  }
  std::vector<std::size_t> keep_rows;
  for (std::size_t r = 0; r < rows; ++r) {
    if (r != pivot_row) keep_rows.push_back(r);
  }
  ElementSet keep_cols;
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < cols; ++c) {
    if (c == e) continue;
    keep_cols.push_back(c);
    labels.push_back(labels_[c]);
  }
  Matrix reduced = work.select_rows(keep_rows).select_columns(keep_cols);
  return RepresentedMatroid(row_space_basis(reduced), std::move(labels));
}

RepresentedMatroid RepresentedMatroid::reorder(const std::vector<std::string>& labels) const {
  if (labels.size() != size()) {
    throw DimensionMismatch("reorder: label list has the wrong size");
  }
  std::vector<std::size_t> cols;
  cols.reserve(labels.size());
  for (const std::string& l : labels) cols.push_back(index_of(l));
  return RepresentedMatroid(matrix_.select_columns(cols), labels);
}

RepresentedMatroid apply_schedule(const RepresentedMatroid& m,
                                  const MinorSchedule& schedule) {
  std::set<std::string> seen;
  RepresentedMatroid current = m;
  for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
    const MinorStep& step = schedule.steps[i];
    if (!seen.insert(step.label).second) {
      throw ScheduleError(i, "label '" + step.label + "' appears in an earlier step");
    }
    try {
      current = step.kind == StepKind::kContract ? current.contract(step.label)
                                                 : current.delete_element(step.label);
    } catch (const UnknownLabel& e) {
      throw ScheduleError(i, e.what());
    } catch (const LoopContraction& e) {
      throw ScheduleError(i, e.what());
    }
  }
  return current;
}

std::vector<ElementSet> components(const RepresentedMatroid& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  RrefResult red = rref(m.matrix());
  DisjointSets sets(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      if (red.reduced(r, c) != 0) sets.unite(c, red.pivots[r]);
    }
  }
  std::vector<ElementSet> blocks;
  std::vector<std::size_t> block_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = sets.find(i);
    if (block_of[root] == n) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(i);
  }
  return blocks;
}

bool is_connected(const RepresentedMatroid& m) { return components(m).size() <= 1; }

BasisSetEncoding basis_set(const RepresentedMatroid& m) {
  const std::size_t n = m.size();
  if (n > kBasisSetGuard) {
    throw GuardExceeded("basis_set: " + std::to_string(n) + " elements exceeds the cap of " +
                        std::to_string(kBasisSetGuard));
  }
  BasisSetEncoding out{n, m.rank(), {}};
  const std::size_t r = m.rank();
  if (r == 0) {
    out.bases.push_back(0);
    return out;
  }
  // Gosper's hack over r-subsets in increasing order.
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t s = (std::uint64_t{1} << r) - 1;
  ElementSet cols;
  while (s < limit) {
    cols.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1) cols.push_back(i);
    }
    if (m.rank_of(cols) == r) out.bases.push_back(static_cast<std::uint32_t>(s));
    const std::uint64_t c = s & -s;
    const std::uint64_t hi = s + c;
    s = (((hi ^ s) >> 2) / c) | hi;
  }
  return out;
}

bool satisfies_basis_exchange(const BasisSetEncoding& b) {
  if (b.ground_size > 12) throw GuardExceeded("basis exchange check is capped at 12 elements");
  if (b.bases.empty()) return false;
  std::set<std::uint32_t> all(b.bases.begin(), b.bases.end());
  for (std::uint32_t x : b.bases) {
    if (static_cast<std::size_t>(std::popcount(x)) != b.rank) return false;
    for (std::uint32_t y : b.bases) {
      for (std::uint32_t diff = x & ~y; diff != 0; diff &= diff - 1) {
        const std::uint32_t e = diff & -diff;
        bool found = false;
        for (std::uint32_t rest = y & ~x; rest != 0 && !found; rest &= rest - 1) {
          const std::uint32_t f = rest & -rest;
          found = all.contains((x & ~e) | f);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool same_matroid(const RepresentedMatroid& a, const RepresentedMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  for (const std::string& l : a.labels()) {
    if (!b.has(l)) return false;
  }
  return basis_set(a) == basis_set(b.reorder(a.labels()));
}

bool same_representation(const RepresentedMatroid& a, const RepresentedMatroid& b) {
  if (a.size() != b.size() || !(a.field() == b.field())) return false;
  for (const std::string& l : a.labels()) {
    if (!b.has(l)) return false;
  }
  return row_space_basis(a.matrix()) == row_space_basis(b.reorder(a.labels()).matrix());
}

}  // namespace cddembed
