#include "cddembed/shared_subspace.hpp"

#include <sstream>

#include "cddembed/connectivity.hpp"
#include "cddembed/error.hpp"

namespace cddembed {

LemmaState::LemmaState(PrimeField field, std::size_t ambient)
    : a(field, ambient), l(field, ambient), r(field, ambient), total(field, ambient) {}

namespace {

// Writes v = u + w with u in span(first) and w in span(second); free
// coefficients are zero. Returns {u, w}.
std::pair<Vector, Vector> split_along(const PrimeField& f, std::size_t ambient,
                                      const std::vector<Vector>& first,
                                      const std::vector<Vector>& second, const Vector& v,
                                      std::size_t m) {
  std::vector<Vector> gens = first;
  gens.insert(gens.end(), second.begin(), second.end());
  std::optional<Vector> c = solve(Matrix::from_columns(f, ambient, gens), v);
  if (!c) {
    throw AssertionFailure("decomposable-extension",
                           "m=" + std::to_string(m) + ": vector outside the generated sum");
  }
  Vector u(ambient, 0), w(ambient, 0);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if ((*c)[j] == 0) continue;
    Vector& target = j < first.size() ? u : w;
    target = vec::add(f, target, vec::scale(f, (*c)[j], gens[j]));
  }
  return {u, w};
}

void require(bool ok, const char* property, std::size_t m, const std::string& detail = "") {
  if (!ok) {
    throw AssertionFailure(property, "m=" + std::to_string(m) + (detail.empty() ? "" : ": ") +
                                         detail);
  }
}

void check_state(const LemmaState& before, const LemmaState& s) {
  const PrimeField& f = s.a.field();
  const std::size_t n = s.a.ambient();
  require(s.total.contains(s.a), "A-inside-sum", s.m);

  std::vector<Subspace> lefts, rights;
  for (std::size_t i = 0; i < s.m; ++i) (s.left[i] ? lefts : rights).push_back(s.absorbed[i]);
  require(sum_all(f, n, lefts) == s.l && sum_all(f, n, rights) == s.r, "L-R-are-block-sums",
          s.m);

  if (before.m > 0) {
    require(s.a.contains(before.a) && s.l.contains(before.l) && s.r.contains(before.r),
            "monotone", s.m);
  }
  const Subspace lr = intersect(s.l, s.r);
  require(s.a.contains(lr), "L-cap-R-inside-A", s.m);
  require(s.a.dim() <= 3 * lr.dim(), "dim-A-at-most-3-dim-L-cap-R", s.m,
          "dim A=" + std::to_string(s.a.dim()) + " dim L∩R=" + std::to_string(lr.dim()));
  std::size_t qsum = 0;
  for (const Subspace& x : s.absorbed) qsum += quotient_dim(x, s.a);
  require(qsum <= s.total.dim(), "quotient-sum-bound", s.m,
          std::to_string(qsum) + " > " + std::to_string(s.total.dim()));
}

}  // namespace

LemmaState lemma_step(const LemmaState& state, const Subspace& next, LemmaTrace* trace,
                      bool check) {
  if (next.ambient() != state.a.ambient() || !(next.field() == state.a.field())) {
    throw DimensionMismatch("shared subspace: all spaces need one field and ambient dimension");
  }
  const PrimeField& f = next.field();
  const std::size_t n = next.ambient();
  LemmaState s = state;
  s.m = state.m + 1;
  s.absorbed.push_back(next);
  LemmaStep rec;
  rec.m = s.m;

  if (state.m == 0) {
    s.l = next;
    s.left.push_back(true);
  } else {
    const Subspace a_prime = intersect(sum(next, state.a), state.total);
    rec.dim_a_prime = a_prime.dim();
    if (check) require(a_prime.contains(state.a), "A-prime-contains-A", s.m);
    const Subspace lr_before = intersect(state.l, state.r);
    if (a_prime.dim() == state.a.dim()) {
      rec.kind = LemmaCase::kEqual;
      s.l = sum(state.l, next);
      s.left.push_back(true);
      s.a = sum(state.a, intersect(s.l, s.r));
    } else {
      rec.kind = LemmaCase::kProper;
      const std::size_t d = a_prime.dim() - state.a.dim();
      rec.gain = d;
      const std::vector<Vector> ext = extend_basis(a_prime, state.a);
      const std::vector<Vector> x_basis = next.basis_vectors();
      const std::vector<Vector> a_basis = state.a.basis_vectors();
      const std::vector<Vector> l_basis = state.l.basis_vectors();
      const std::vector<Vector> r_basis = state.r.basis_vectors();
      for (const Vector& v : ext) {
        // v = x + a with x in X_m and a in A_{m-1}; keep x.
        Vector x = split_along(f, n, x_basis, a_basis, v, s.m).first;
        auto [lpart, rpart] = split_along(f, n, l_basis, r_basis, x, s.m);
        rec.x.push_back(std::move(x));
        rec.l_parts.push_back(std::move(lpart));
        rec.r_parts.push_back(std::move(rpart));
      }
      const Subspace lp = Subspace::span(f, n, rec.l_parts);
      const Subspace rp = Subspace::span(f, n, rec.r_parts);
      if (check) {
        const Subspace xs = Subspace::span(f, n, rec.x);
        require(xs.dim() == d && intersect(xs, state.a).is_zero() &&
                    sum(xs, state.a) == a_prime,
                "extension-basis", s.m);
        const Subspace both = sum(lp, rp);
        require(both.dim() - intersect(both, state.a).dim() >= d, "extension-gain", s.m);
        const Subspace common = intersect(lp, rp);
        require(common.dim() == intersect(common, state.a).dim(), "shared-part-inside-A", s.m);
      }
      rec.left_score = lp.dim() - intersect(lp, state.a).dim();
      rec.right_score = rp.dim() - intersect(rp, state.a).dim();
      if (check) require(rec.left_score + rec.right_score >= d, "side-scores", s.m);
      if (2 * rec.left_score >= d) {
        s.r = sum(state.r, next);
        s.left.push_back(false);
      } else {
        s.l = sum(state.l, next);
        s.left.push_back(true);
      }
      s.a = sum(a_prime, intersect(s.l, s.r));
      if (check) {
        const std::size_t grown = intersect(s.l, s.r).dim() - lr_before.dim();
        require(d <= 2 * grown, "gain-at-most-twice-growth", s.m,
                "d=" + std::to_string(d) + " growth=" + std::to_string(grown));
      }
    }
  }
  s.total = sum(state.total, next);
  rec.to_left = s.left.back();
  rec.dim_a = s.a.dim();
  rec.dim_lr = intersect(s.l, s.r).dim();
  if (check) check_state(state, s);
  if (trace) trace->steps.push_back(std::move(rec));
  return s;
}

SharedSubspaceResult shared_subspace(const std::vector<Subspace>& spaces, bool check) {
  if (spaces.empty()) throw Error("shared subspace: need at least one space");
  LemmaState s(spaces.front().field(), spaces.front().ambient());
  SharedSubspaceResult out{Subspace(spaces.front().field(), spaces.front().ambient()), {}};
  for (const Subspace& x : spaces) s = lemma_step(s, x, &out.trace, check);
  out.a = s.a;
  return out;
}

SharedSubspaceAudit audit_shared_subspace(const std::vector<Subspace>& spaces,
                                          const Subspace& a) {
  SharedSubspaceAudit au;
  const Subspace total = sum_all(a.field(), a.ambient(), spaces);
  au.lambda_star = lambda_star_spaces(spaces);
  au.dim_a = a.dim();
  for (const Subspace& x : spaces) au.quotient_sum += quotient_dim(x, a);
  au.dim_total = total.dim();
  au.dim_total_mod_a = quotient_dim(total, a);
  au.slack = au.quotient_sum > au.dim_total_mod_a ? au.quotient_sum - au.dim_total_mod_a : 0;
  au.a_inside_total = total.contains(a);
  au.dim_bound = au.dim_a <= 3 * au.lambda_star;
  au.quotient_bound = au.quotient_sum <= au.dim_total;
  au.slack_bound = au.lambda_star <= au.dim_a + au.slack;
  return au;
}

std::string format_trace(const LemmaTrace& trace) {
  std::ostringstream out;
  for (const LemmaStep& s : trace.steps) {
    out << "step " << s.m << ": ";
    switch (s.kind) {
      case LemmaCase::kFirst: out << "first"; break;
      case LemmaCase::kEqual: out << "equal dimA'=" << s.dim_a_prime; break;
      case LemmaCase::kProper:
        out << "proper dimA'=" << s.dim_a_prime << " d=" << s.gain
            << " scores=" << s.left_score << '/' << s.right_score;
        break;
    }
    out << " side=" << (s.to_left ? 'L' : 'R') << " dimA=" << s.dim_a
        << " dimLR=" << s.dim_lr << '\n';
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      auto show = [&](const Vector& v) {
        out << '[';
        for (std::size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << v[j];
        out << ']';
      };
      out << "  x" << i + 1 << '=';
      show(s.x[i]);
      out << " l=";
      show(s.l_parts[i]);
      out << " r=";
      show(s.r_parts[i]);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace cddembed
