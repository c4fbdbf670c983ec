#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cddembed/subspace.hpp"

namespace cddembed {

// State after absorbing X_1..X_m. L is the sum of the X_i with i in `left`,
// R the sum of the others, total the sum of all of them.
struct LemmaState {
  std::size_t m = 0;
  Subspace a;
  Subspace l;
  Subspace r;
  Subspace total;
  std::vector<bool> left;          // left[i]: X_{i+1} went to L
  std::vector<Subspace> absorbed;  // X_1..X_m

  LemmaState(PrimeField field, std::size_t ambient);
};

enum class LemmaCase { kFirst, kEqual, kProper };

struct LemmaStep {
  std::size_t m = 0;  // 1-based index of the absorbed space
  LemmaCase kind = LemmaCase::kFirst;
  std::size_t dim_a_prime = 0;  // dim (X_m + A_{m-1}) ∩ (X_1 + ... + X_{m-1})
  std::size_t gain = 0;         // dim A'_m - dim A_{m-1}
  bool to_left = true;          // which side X_m joined
  std::vector<Vector> x;        // extension vectors, inside X_m
  std::vector<Vector> l_parts;  // x_i = l_i + r_i with l_i in L, r_i in R
  std::vector<Vector> r_parts;
  std::size_t left_score = 0;   // dim L' - dim (L' ∩ A_{m-1})
  std::size_t right_score = 0;
  std::size_t dim_a = 0;        // after the step
  std::size_t dim_lr = 0;       // dim (L ∩ R) after the step
};

struct LemmaTrace {
  std::vector<LemmaStep> steps;
};

// Absorbs the next space. With `check` set every invariant of the
// construction is verified, and a violation throws AssertionFailure naming
// the property and m.
LemmaState lemma_step(const LemmaState& state, const Subspace& next, LemmaTrace* trace,
                      bool check = true);

struct SharedSubspaceResult {
  Subspace a;
  LemmaTrace trace;
};

// A subspace A ⊆ ΣX_i with dim A ≤ 3·λ*(X_1..X_k) and
// Σ dim(X_i/A) ≤ dim ΣX_i. The result depends on the order of the inputs.
// Throws DimensionMismatch on mixed fields or ambient dimensions, Error when
// spaces is empty.
SharedSubspaceResult shared_subspace(const std::vector<Subspace>& spaces, bool check = true);

// The two inequalities of the result and the slack bound derived from them,
// recomputed from scratch.
struct SharedSubspaceAudit {
  std::size_t lambda_star = 0;
  std::size_t dim_a = 0;
  std::size_t quotient_sum = 0;     // Σ dim(X_i/A)
  std::size_t dim_total = 0;        // dim ΣX_i
  std::size_t dim_total_mod_a = 0;  // dim (ΣX_i)/A
  std::size_t slack = 0;            // quotient_sum - dim_total_mod_a (0 if negative)
  bool a_inside_total = false;
  bool dim_bound = false;     // dim A ≤ 3 λ*
  bool quotient_bound = false;  // quotient_sum ≤ dim_total
  bool slack_bound = false;   // λ* ≤ dim A + slack
  bool ok() const { return a_inside_total && dim_bound && quotient_bound && slack_bound; }
};

SharedSubspaceAudit audit_shared_subspace(const std::vector<Subspace>& spaces, const Subspace& a);

std::string format_trace(const LemmaTrace& trace);

}  // namespace cddembed
