#include "cddembed/depth.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "cddembed/error.hpp"
#include "cddembed/io.hpp"

namespace cddembed {

const char* to_string(DepthMode mode) {
  switch (mode) {
    case DepthMode::kCdd: return "cdd";
    case DepthMode::kCd: return "cd";
    case DepthMode::kDd: return "dd";
  }
  return "?";
}

DepthMode parse_depth_mode(std::string_view s) {
  if (s == "cdd") return DepthMode::kCdd;
  if (s == "cd") return DepthMode::kCd;
  if (s == "dd") return DepthMode::kDd;
  throw Error("unknown depth mode '" + std::string(s) + "'");
}

DepthCertificate DepthCertificate::leaf(std::string element) {
  return {Kind::kLeaf, std::move(element), {}};
}

DepthCertificate DepthCertificate::step(StepKind kind, std::string element,
                                        DepthCertificate child) {
  DepthCertificate c{kind == StepKind::kContract ? Kind::kContract : Kind::kDelete,
                     std::move(element), {}};
  c.children.push_back(std::move(child));
  return c;
}

DepthCertificate DepthCertificate::split(std::vector<DepthCertificate> children) {
  return {Kind::kSplit, {}, std::move(children)};
}

std::size_t DepthCertificate::depth() const {
  switch (kind) {
    case Kind::kLeaf: return 1;
    case Kind::kContract:
    case Kind::kDelete: return 1 + children.front().depth();
    case Kind::kSplit: {
      std::size_t best = 0;
      for (const DepthCertificate& c : children) best = std::max(best, c.depth());
      return best;
    }
  }
  return 0;
}

std::vector<std::string> DepthCertificate::elements() const {
  std::vector<std::string> out;
  if (kind != Kind::kSplit) out.push_back(element);
  for (const DepthCertificate& c : children) {
    std::vector<std::string> sub = c.elements();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

namespace {

DepthCertificate from_sexpr(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) {
    throw ParseError("expected '(leaf|contract|delete|split ...)'", e.line, e.column);
  }
  const std::string& head = e.items[0].atom;
  auto element_at = [&](std::size_t i) -> const std::string& {
    if (i >= e.items.size() || e.items[i].is_list) {
      throw ParseError("'" + head + "' expects an element label", e.line, e.column);
    }
    return e.items[i].atom;
  };
  if (head == "leaf") {
    if (e.items.size() != 2) throw ParseError("'leaf' takes one label", e.line, e.column);
    return DepthCertificate::leaf(element_at(1));
  }
  if (head == "contract" || head == "delete") {
    if (e.items.size() != 3) {
      throw ParseError("'" + head + "' takes a label and one child", e.line, e.column);
    }
    return DepthCertificate::step(head == "contract" ? StepKind::kContract : StepKind::kDelete,
                                  element_at(1), from_sexpr(e.items[2]));
  }
  if (head == "split") {
    std::vector<DepthCertificate> children;
    for (std::size_t i = 1; i < e.items.size(); ++i) children.push_back(from_sexpr(e.items[i]));
    return DepthCertificate::split(std::move(children));
  }
  throw ParseError("unknown certificate node '" + head + "'", e.items[0].line,
                   e.items[0].column);
}

void format_into(const DepthCertificate& c, std::string& out) {
  using Kind = DepthCertificate::Kind;
  switch (c.kind) {
    case Kind::kLeaf:
      out += "(leaf " + c.element + ")";
      return;
    case Kind::kContract:
    case Kind::kDelete:
      out += c.kind == Kind::kContract ? "(contract " : "(delete ";
      out += c.element;
      out += ' ';
      format_into(c.children.front(), out);
      out += ')';
      return;
    case Kind::kSplit:
      out += "(split";
      for (const DepthCertificate& child : c.children) {
        out += ' ';
        format_into(child, out);
      }
      out += ')';
      return;
  }
}

}  // namespace

DepthCertificate parse_certificate(std::string_view text) { return from_sexpr(parse_sexpr(text)); }

std::string format_certificate(const DepthCertificate& c) {
  std::string out;
  format_into(c, out);
  return out;
}

namespace {

// Scales v so its first nonzero entry is 1.
Vector projective_normal(const PrimeField& f, Vector v) {
  for (Residue x : v) {
    if (x != 0) return vec::scale(f, f.inv(x), v);
  }
  return v;
}

// Elements worth branching on in a connected matroid. An element parallel or
// in series with an earlier one is skipped: the transposition of the two is an
// automorphism, so both yield isomorphic minors.
std::vector<std::size_t> branch_representatives(const RepresentedMatroid& m) {
  const PrimeField& f = m.field();
  const std::size_t n = m.size();
  RrefResult red = rref(m.matrix());
  std::vector<std::size_t> row_of(n, SIZE_MAX);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) row_of[red.pivots[i]] = i;
  std::vector<std::size_t> nonpivots;
  for (std::size_t c = 0; c < n; ++c) {
    if (row_of[c] == SIZE_MAX) nonpivots.push_back(c);
  }
  // Standard-form dual: for [I | D] it is [-D^T | I].
  std::vector<Vector> dual(n, Vector(nonpivots.size(), 0));
  for (std::size_t q = 0; q < nonpivots.size(); ++q) {
    const std::size_t col = nonpivots[q];
    dual[col][q] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      dual[red.pivots[i]][q] = f.neg(red.reduced(i, col));
    }
  }
  std::map<Vector, std::size_t> seen_primal, seen_dual;
  std::vector<std::size_t> reps;
  for (std::size_t e = 0; e < n; ++e) {
    const bool p_new =
        seen_primal.emplace(projective_normal(f, red.reduced.column(e)), e).second;
    const bool d_new = seen_dual.emplace(projective_normal(f, dual[e]), e).second;
    if (p_new && d_new) reps.push_back(e);
  }
  return reps;
}

struct MemoKey {
  std::vector<Residue> data;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Residue x : k.data) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Columns of the RREF sorted, labels dropped. Equal keys mean the same
// multiset of vectors, hence isomorphic matroids and equal depth.
MemoKey memo_key(const RepresentedMatroid& m) {
  const Matrix reduced = rref(m.matrix()).reduced;
  std::vector<Vector> cols;
  cols.reserve(reduced.cols());
  for (std::size_t c = 0; c < reduced.cols(); ++c) cols.push_back(reduced.column(c));
  std::sort(cols.begin(), cols.end());
  MemoKey key;
  key.data.push_back(static_cast<Residue>(reduced.rows()));
  key.data.push_back(static_cast<Residue>(reduced.cols()));
  for (const Vector& c : cols) key.data.insert(key.data.end(), c.begin(), c.end());
  return key;
}

class DepthSolver {
 public:
  explicit DepthSolver(DepthMode mode) : mode_(mode) {}

  std::size_t exact(const RepresentedMatroid& m) {
    const std::size_t n = m.size();
    for (std::size_t t = 1; t <= n; ++t) {
      const std::size_t v = bounded(m, t + 1);
      if (v <= t) return v;
    }
    return bounded(m, n + 2);
  }

  DepthCertificate certificate(const RepresentedMatroid& m, std::size_t value) {
    if (m.size() == 0) return DepthCertificate::split({});
    if (m.size() == 1) return DepthCertificate::leaf(m.labels()[0]);
    const std::vector<ElementSet> comps = components(m);
    if (comps.size() > 1) {
      std::vector<DepthCertificate> children;
      for (const ElementSet& c : comps) {
        RepresentedMatroid part = m.restrict_to(c);
        children.push_back(certificate(part, exact(part)));
      }
      return DepthCertificate::split(std::move(children));
    }
    for (std::size_t e : branch_representatives(m)) {
      for (StepKind op : ops()) {
        RepresentedMatroid child = apply(m, e, op);
        if (bounded(child, value) == value - 1) {
          return DepthCertificate::step(op, m.labels()[e], certificate(child, value - 1));
        }
      }
    }
    throw AssertionFailure("depth-solver", "no branch realizes the computed value");
  }

 private:
  struct Entry {
    std::size_t lower = 0;
    bool exact = false;
  };

  std::vector<StepKind> ops() const {
    switch (mode_) {
      case DepthMode::kCdd: return {StepKind::kContract, StepKind::kDelete};
      case DepthMode::kCd: return {StepKind::kContract};
      case DepthMode::kDd: return {StepKind::kDelete};
    }
    return {};
  }

  static RepresentedMatroid apply(const RepresentedMatroid& m, std::size_t e, StepKind op) {
    return op == StepKind::kContract ? m.contract(m.labels()[e])
                                     : m.delete_element(m.labels()[e]);
  }

  // Exact value when it is below cap, otherwise some lower bound >= cap.
  std::size_t bounded(const RepresentedMatroid& m, std::size_t cap) {
    const std::size_t n = m.size();
    if (n <= 1) return n;
    const std::vector<ElementSet> comps = components(m);
    if (comps.size() > 1) {
      std::size_t result = 0;
      for (const ElementSet& c : comps) {
        result = std::max(result, bounded(m.restrict_to(c), cap));
        if (result >= cap) break;
      }
      return result;
    }
    MemoKey key = memo_key(m);
    Entry& cached = memo_[key];
    if (cached.exact) return cached.lower;
    if (cached.lower >= cap) return cached.lower;
    // Connected with at least two elements: no loops, and one step is needed.
    const std::size_t floor = std::max<std::size_t>(2, cached.lower);
    if (floor >= cap) {
      memo_[key].lower = floor;
      return floor;
    }
    std::size_t best = cap;
    for (std::size_t e : branch_representatives(m)) {
      for (StepKind op : ops()) {
        if (best <= floor) break;
        const std::size_t v = 1 + bounded(apply(m, e, op), best - 1);
        best = std::min(best, v);
      }
      if (best <= floor) break;
    }
    Entry& slot = memo_[key];  // the recursion may have rehashed
    if (best < cap) {
      slot.lower = best;
      slot.exact = true;
    } else {
      slot.lower = std::max(slot.lower, cap);
    }
    return slot.exact ? slot.lower : cap;
  }

  DepthMode mode_;
  std::unordered_map<MemoKey, Entry, MemoKeyHash> memo_;
};

}  // namespace

DepthResult solve_depth(const RepresentedMatroid& m, DepthMode mode) {
  if (m.size() > kDepthSolverGuard) {
    throw GuardExceeded("depth solver: " + std::to_string(m.size()) +
                        " elements exceeds the cap of " + std::to_string(kDepthSolverGuard));
  }
  DepthSolver solver(mode);
  const std::size_t value = solver.exact(m);
  return {value, solver.certificate(m, value)};
}

namespace {

std::size_t verify_at(const RepresentedMatroid& m, const DepthCertificate& c, DepthMode mode,
                      const std::string& path) {
  using Kind = DepthCertificate::Kind;
  switch (c.kind) {
    case Kind::kLeaf:
      if (m.size() != 1 || m.labels()[0] != c.element) {
        throw CertificateError(path + "/leaf:" + c.element,
                               "leaf requires the single-element minor {" + c.element +
                                   "}, current minor has " + std::to_string(m.size()) +
                                   " element(s)");
      }
      return 1;
    case Kind::kContract:
    case Kind::kDelete: {
      const bool contract = c.kind == Kind::kContract;
      const std::string here = path + (contract ? "/contract:" : "/delete:") + c.element;
      if (c.children.size() != 1) throw CertificateError(here, "step needs exactly one child");
      if (contract && mode == DepthMode::kDd) {
        throw CertificateError(here, "contraction is not allowed for deletion-depth");
      }
      if (!contract && mode == DepthMode::kCd) {
        throw CertificateError(here, "deletion is not allowed for contraction-depth");
      }
      if (!m.has(c.element)) {
        throw CertificateError(here, "element is not in the current minor");
      }
      if (contract && m.is_loop(m.index_of(c.element))) {
        throw CertificateError(here, "contracts a loop");
      }
      RepresentedMatroid next = contract ? m.contract(c.element) : m.delete_element(c.element);
      return 1 + verify_at(next, c.children.front(), mode, here);
    }
    case Kind::kSplit: {
      const std::vector<ElementSet> comps = components(m);
      if (comps.size() != c.children.size()) {
        throw CertificateError(path + "/split",
                               "has " + std::to_string(c.children.size()) +
                                   " children but the minor has " +
                                   std::to_string(comps.size()) + " components");
      }
      std::vector<bool> used(comps.size(), false);
      std::size_t best = 0;
      for (std::size_t i = 0; i < c.children.size(); ++i) {
        const std::string here = path + "/split[" + std::to_string(i) + "]";
        std::vector<std::string> names = c.children[i].elements();
        std::sort(names.begin(), names.end());
        std::optional<std::size_t> match;
        for (std::size_t j = 0; j < comps.size() && !match; ++j) {
          std::vector<std::string> comp = m.labels_of(comps[j]);
          std::sort(comp.begin(), comp.end());
          if (!used[j] && comp == names) match = j;
        }
        if (!match) {
          throw CertificateError(here, "child does not cover exactly one component");
        }
        used[*match] = true;
        best = std::max(best, verify_at(m.restrict_to(comps[*match]), c.children[i], mode, here));
      }
      return best;
    }
  }
  return 0;
}

// The certificate with every node about elements outside keep removed.
std::optional<DepthCertificate> restrict_certificate(const DepthCertificate& c,
                                                     const std::set<std::string>& keep) {
  using Kind = DepthCertificate::Kind;
  switch (c.kind) {
    case Kind::kLeaf:
      if (keep.contains(c.element)) return c;
      return std::nullopt;
    case Kind::kContract:
    case Kind::kDelete: {
      std::optional<DepthCertificate> child = restrict_certificate(c.children.front(), keep);
      if (!keep.contains(c.element)) return child;
      DepthCertificate out{c.kind, c.element, {}};
      out.children.push_back(child ? std::move(*child) : DepthCertificate::split({}));
      return out;
    }
    case Kind::kSplit: {
      std::vector<DepthCertificate> kept;
      for (const DepthCertificate& child : c.children) {
        if (auto r = restrict_certificate(child, keep)) kept.push_back(std::move(*r));
      }
      if (kept.empty()) return std::nullopt;
      if (kept.size() == 1) return std::move(kept.front());
      return DepthCertificate::split(std::move(kept));
    }
  }
  return std::nullopt;
}

DepthCertificate canonical_at(const RepresentedMatroid& m, const DepthCertificate& c) {
  using Kind = DepthCertificate::Kind;
  if (m.size() == 0) return DepthCertificate::split({});
  if (m.size() == 1) return DepthCertificate::leaf(m.labels()[0]);
  const std::vector<ElementSet> comps = components(m);
  if (comps.size() > 1) {
    std::vector<DepthCertificate> children;
    for (const ElementSet& comp : comps) {
      std::vector<std::string> names = m.labels_of(comp);
      std::set<std::string> keep(names.begin(), names.end());
      std::optional<DepthCertificate> part = restrict_certificate(c, keep);
      if (!part) throw CertificateError("canonicalize", "component has no certificate");
      children.push_back(canonical_at(m.restrict_to(comp), *part));
    }
    return DepthCertificate::split(std::move(children));
  }
  if (c.kind == Kind::kSplit && c.children.size() == 1) return canonical_at(m, c.children[0]);
  if (c.kind != Kind::kContract && c.kind != Kind::kDelete) {
    throw CertificateError("canonicalize",
                           "connected minor with " + std::to_string(m.size()) +
                               " elements is not reduced by a step");
  }
  const StepKind kind = c.kind == Kind::kContract ? StepKind::kContract : StepKind::kDelete;
  RepresentedMatroid next =
      kind == StepKind::kContract ? m.contract(c.element) : m.delete_element(c.element);
  return DepthCertificate::step(kind, c.element, canonical_at(next, c.children.front()));
}

}  // namespace

std::size_t verify_certificate(const RepresentedMatroid& m, const DepthCertificate& cert,
                               DepthMode mode) {
  return verify_at(m, cert, mode, "root");
}

DepthCertificate canonicalize_certificate(const RepresentedMatroid& m,
                                          const DepthCertificate& cert) {
  return canonical_at(m, cert);
}

}  // namespace cddembed
