#include "cddembed/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "cddembed/connectivity.hpp"
#include "cddembed/decomposition.hpp"
#include "cddembed/depth.hpp"
#include "cddembed/embedding.hpp"
#include "cddembed/error.hpp"
#include "cddembed/generators.hpp"
#include "cddembed/shared_subspace.hpp"

namespace cddembed {
namespace {

// Runtime budgets in seconds.
constexpr double kLemmaBudget = 30;
constexpr double kFatCycleBudget = 300;
constexpr double kFatEmbedBudget = 60;
constexpr double kPerInstanceBudget = 600;

constexpr std::size_t kLemmaInstances = 1000;
constexpr std::size_t kPerInstanceTarget = 50;
constexpr std::size_t kPerInstanceMaxElements = 8;
constexpr std::size_t kExactCddMaxElements = 16;
constexpr std::size_t kRootingMinInstances = 30;
constexpr std::size_t kComponentMaxElements = 10;
constexpr std::size_t kBranchDepthMaxElements = 7;
constexpr std::size_t kMinMutations = 10;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Subspace> lemma_instance(std::uint64_t seed) {
  SplitMix64 rng(seed);
  static constexpr std::uint32_t kPrimes[] = {2, 3, 5};
  const PrimeField f(kPrimes[rng.below(3)]);
  const std::size_t ambient = 1 + rng.below(8);
  const std::size_t k = 1 + rng.below(5);
  auto random_vector = [&] {
    Vector v(ambient);
    for (Residue& x : v) x = static_cast<Residue>(rng.below(f.modulus()));
    return v;
  };
  // A small shared pool makes overlaps between the spaces common.
  std::vector<Vector> pool;
  for (std::size_t i = 0, n = 1 + rng.below(ambient + 1); i < n; ++i) pool.push_back(random_vector());
  std::vector<Subspace> spaces;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vector> gens;
    for (std::size_t g = 0, n = rng.below(4); g < n; ++g) {
      Vector v(ambient, 0);
      for (const Vector& p : pool) {
        if (rng.below(2)) v = vec::add(f, v, vec::scale(f, static_cast<Residue>(rng.below(f.modulus())), p));
      }
      gens.push_back(std::move(v));
    }
    if (rng.below(3) == 0) gens.push_back(random_vector());
    spaces.push_back(Subspace::span(f, ambient, gens));
  }
  return spaces;
}

RepresentedMatroid corpus_matroid(std::uint64_t seed) {
  return random_instance(seed, corpus_params(seed));
}

std::vector<RepresentedMatroid> corpus() {
  std::vector<RepresentedMatroid> out;
  for (std::uint64_t s : manifest_seeds(builtin_manifest(), "corpus")) out.push_back(corpus_matroid(s));
  for (std::size_t n : {2, 3}) out.push_back(fat_cycle(n).matroid);
  out.push_back(uniform(1, 3, 2));
  out.push_back(uniform(2, 4, 5));
  out.push_back(uniform(3, 3, 2));
  return out;
}

CriterionResult lemma_suite(bool slack_only) {
  CriterionResult res;
  const auto t0 = Clock::now();
  std::size_t ok = 0, proper_steps = 0, failures = 0;
  std::string first_failure;
  for (std::uint64_t seed : manifest_seeds(builtin_manifest(), "subspaces")) {
    const std::vector<Subspace> spaces = lemma_instance(seed);
    try {
      const SharedSubspaceResult out = shared_subspace(spaces, true);
      for (const LemmaStep& s : out.trace.steps) proper_steps += s.kind == LemmaCase::kProper;
      const SharedSubspaceAudit au = audit_shared_subspace(spaces, out.a);
      const bool good = slack_only ? au.slack_bound
                                   : au.a_inside_total && au.dim_bound && au.quotient_bound;
      if (good) {
        ++ok;
      } else if (failures++ == 0) {
        first_failure = "seed " + std::to_string(seed) + ": dimA=" + std::to_string(au.dim_a) +
                        " lambda*=" + std::to_string(au.lambda_star) +
                        " slack=" + std::to_string(au.slack);
      }
    } catch (const AssertionFailure& e) {
      if (failures++ == 0) first_failure = "seed " + std::to_string(seed) + ": " + e.what();
    }
  }
  res.seconds = since(t0);
  const std::size_t total = manifest_seeds(builtin_manifest(), "subspaces").size();
  res.pass = total == kLemmaInstances && ok == total && res.seconds < kLemmaBudget;
  res.detail = std::to_string(ok) + "/" + std::to_string(total) + " instances hold (" +
               std::to_string(proper_steps) + " proper-case steps)";
  if (!first_failure.empty()) res.detail += "; first failure " + first_failure;
  return res;
}

CriterionResult fat_cycle_cdd() {
  CriterionResult res;
  const auto t0 = Clock::now();
  res.pass = true;
  for (std::size_t n : {3, 4}) {
    const FatCycle fc = fat_cycle(n);
    const DepthResult r = cdd(fc.matroid);
    const std::size_t expected = n + 1;
    const std::size_t replay = verify_certificate(fc.matroid, r.certificate, DepthMode::kCdd);
    res.pass = res.pass && r.value == expected;
    res.detail += "n=" + std::to_string(n) + ": cdd=" + std::to_string(r.value) + " expected " +
                  std::to_string(expected) + " (certificate replays to " +
                  std::to_string(replay) + "); ";
  }
  res.seconds = since(t0);
  res.pass = res.pass && res.seconds < kFatCycleBudget;
  res.detail += "n=2 excluded (U(1,4))";
  return res;
}

CriterionResult fat_cycle_embedding() {
  CriterionResult res;
  const auto t0 = Clock::now();
  res.pass = true;
  VerifyOptions vo;
  vo.max_enum = 16;  // n=5 has 25 elements and is checked on random subsets
  for (std::size_t n : {3, 4, 5}) {
    const FatCycle fc = fat_cycle(n);
    const EmbeddingResult e = embed(fc.matroid, fc.tree, 2, 1);
    const EmbeddingVerification v =
        verify_embedding(e.n, e.schedule, e.certificate, fc.matroid, 2, 1, vo);
    const bool good = v.ok() && v.certificate_value <= 31;
    res.pass = res.pass && good;
    res.detail += "n=" + std::to_string(n) + ": |N|=" + std::to_string(e.n.size()) +
                  " cert=" + std::to_string(v.certificate_value) + "<=31 " +
                  (v.recovery_exact ? "bases" : "sampled") + (good ? " ok; " : " FAILED; ");
    for (const CheckOutcome& c : v.checks) {
      if (!c.pass) res.detail += c.name + ": " + c.detail + "; ";
    }
  }
  if (res.detail.size() >= 2) res.detail.resize(res.detail.size() - 2);
  res.seconds = since(t0);
  res.pass = res.pass && res.seconds < kFatEmbedBudget;
  return res;
}

CriterionResult per_instance_embedding() {
  CriterionResult res;
  const auto t0 = Clock::now();
  static constexpr std::pair<std::size_t, std::size_t> kShapes[] = {
      {1, 0}, {2, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};  // by increasing bound
  std::size_t done = 0, exact_checked = 0, failures = 0, largest = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> shapes;
  std::string first_failure;
  for (std::uint64_t seed : manifest_seeds(builtin_manifest(), "embed")) {
    if (done == kPerInstanceTarget) break;
    SplitMix64 rng(seed);
    RandomParams p;
    p.rows = 2 + rng.below(2);
    p.cols = 4 + rng.below(kPerInstanceMaxElements - 3);
    p.p = rng.below(2) ? 3 : 2;
    p.density = 40 + static_cast<unsigned>(rng.below(30));
    const RepresentedMatroid m = random_instance(seed, p);
    for (auto [d, r] : kShapes) {
      std::optional<DecompositionTree> t = search_rooted(m, d, r);
      if (!t) continue;
      ++done;
      ++shapes[{d, r}];
      const EmbeddingResult e = embed(m, *t, d, r);
      largest = std::max(largest, e.n.size());
      const std::size_t value = verify_certificate(e.n, e.certificate, DepthMode::kCdd);
      bool good = value <= e.bound;
      std::string why = "cert " + std::to_string(value) + " > bound " + std::to_string(e.bound);
      if (good && e.n.size() <= kExactCddMaxElements) {
        ++exact_checked;
        const std::size_t exact = cdd(e.n).value;
        good = exact <= value;
        why = "cdd(N)=" + std::to_string(exact) + " > cert " + std::to_string(value);
      }
      if (!good && failures++ == 0) first_failure = "seed " + std::to_string(seed) + ": " + why;
      break;
    }
  }
  res.seconds = since(t0);
  res.pass = done == kPerInstanceTarget && failures == 0 && res.seconds < kPerInstanceBudget;
  res.detail = std::to_string(done) + " instances embedded, " + std::to_string(exact_checked) +
               " with exact cdd(N), max |N|=" + std::to_string(largest) + ", " +
               std::to_string(failures) + " failures; (d,r) counts:";
  for (const auto& [shape, count] : shapes) {
    res.detail += " (" + std::to_string(shape.first) + "," + std::to_string(shape.second) +
                  ")x" + std::to_string(count);
  }
  if (!first_failure.empty()) res.detail += "; first " + first_failure;
  return res;
}

CriterionResult rooting() {
  CriterionResult res;
  const auto t0 = Clock::now();
  std::size_t checked = 0, failures = 0;
  std::string first_failure;
  auto check = [&](const RepresentedMatroid& m, const DecompositionTree& t, const std::string& tag) {
    if (t.node(t.root()).is_leaf()) return;
    const std::size_t d = t.radius();
    const DecompositionReport probe = validate_unrooted(m, t, d, SIZE_MAX / 4);
    const std::size_t r = probe.max_lambda;
    if (!validate_unrooted(m, t, d, r).valid) return;
    ++checked;
    const DecompositionTree rooted = root_decomposition(m, t, d, r);
    const DecompositionReport rep = validate_rooted(m, rooted, d, r);
    if (!(rep.valid && rep.depth_ok) && failures++ == 0) {
      first_failure = tag + " at (" + std::to_string(d) + "," + std::to_string(r) + ")";
    }
  };
  for (std::uint64_t seed : manifest_seeds(builtin_manifest(), "trees")) {
    const RepresentedMatroid m = corpus_matroid(seed);
    check(m, random_tree(m, seed), "tree seed " + std::to_string(seed));
  }
  for (const RepresentedMatroid& m : corpus()) {
    if (m.size() > kBranchDepthMaxElements) continue;
    const BranchDepthResult bd = branch_depth_oracle(m);
    if (bd.witness) check(m, *bd.witness, "branch-depth witness");
  }
  for (std::size_t n : {3, 4}) check(fat_cycle(n).matroid, fat_cycle(n).tree, "fat cycle");
  res.seconds = since(t0);
  res.pass = checked >= kRootingMinInstances && failures == 0;
  res.detail = std::to_string(checked) + " unrooted decompositions rooted, " +
               std::to_string(failures) + " failures";
  if (!first_failure.empty()) res.detail += "; first " + first_failure;
  return res;
}

CriterionResult component_oracle() {
  CriterionResult res;
  const auto t0 = Clock::now();
  std::size_t checked = 0, failures = 0;
  for (const RepresentedMatroid& m : corpus()) {
    if (m.size() > kComponentMaxElements) continue;
    ++checked;
    std::vector<std::vector<std::string>> fast;
    for (const ElementSet& c : components(m)) {
      std::vector<std::string> names = m.labels_of(c);
      std::sort(names.begin(), names.end());
      fast.push_back(names);
    }
    std::sort(fast.begin(), fast.end());
    if (fast != circuit_components(m)) ++failures;
  }
  res.seconds = since(t0);
  res.pass = checked > 0 && failures == 0;
  res.detail = std::to_string(checked) + " matroids compared, " + std::to_string(failures) +
               " mismatches";
  return res;
}

CriterionResult depth_order() {
  CriterionResult res;
  const auto t0 = Clock::now();
  std::size_t solved = 0, bd_checked = 0, minor_checks = 0, failures = 0;
  std::string first_failure;
  auto fail = [&](const std::string& why) {
    if (failures++ == 0) first_failure = why;
  };
  for (const RepresentedMatroid& m : corpus()) {
    if (m.size() > kDepthSolverGuard) continue;
    const std::size_t vcdd = cdd(m).value, vcd = cd(m).value, vdd = dd(m).value;
    ++solved;
    if (vcdd > vcd || vcdd > vdd) {
      fail("cdd " + std::to_string(vcdd) + " cd " + std::to_string(vcd) + " dd " +
           std::to_string(vdd));
    }
    if (m.size() > kBranchDepthMaxElements) continue;
    const std::size_t bd = branch_depth_oracle(m).value;
    ++bd_checked;
    if (bd > vcdd) fail("bd " + std::to_string(bd) + " > cdd " + std::to_string(vcdd));
    // One deletion and one contraction per instance.
    const std::string& e = m.labels().front();
    std::vector<RepresentedMatroid> minors = {m.delete_element(e)};
    if (!m.is_loop(0)) minors.push_back(m.contract(e));
    for (const RepresentedMatroid& minor : minors) {
      ++minor_checks;
      const std::size_t bm = branch_depth_oracle(minor).value;
      if (bm > bd) fail("bd(minor) " + std::to_string(bm) + " > bd " + std::to_string(bd));
    }
  }
  res.seconds = since(t0);
  res.pass = solved > 0 && bd_checked > 0 && failures == 0;
  res.detail = std::to_string(solved) + " solved, " + std::to_string(bd_checked) +
               " branch-depth comparisons, " + std::to_string(minor_checks) +
               " minor spot checks, " + std::to_string(failures) + " failures";
  if (!first_failure.empty()) res.detail += "; first " + first_failure;
  return res;
}

CriterionResult mutations() {
  CriterionResult res;
  const auto t0 = Clock::now();
  const FatCycle fc = fat_cycle(3);
  const EmbeddingResult e = embed(fc.matroid, fc.tree, 2, 1);
  struct Case {
    std::string name;
    std::function<std::string()> run;  // returns the rejection witness, empty if accepted
  };
  auto verify = [&](const RepresentedMatroid& n, const MinorSchedule& s, const DepthCertificate& c,
                    std::size_t d = 2, std::size_t r = 1) -> std::string {
    const EmbeddingVerification v = verify_embedding(n, s, c, fc.matroid, d, r);
    for (const CheckOutcome& o : v.checks) {
      if (!o.pass) return o.name + ": " + o.detail;
    }
    return "";
  };
  auto first_of = [&](StepKind kind) {
    for (std::size_t i = 0; i < e.schedule.steps.size(); ++i) {
      if (e.schedule.steps[i].kind == kind) return i;
    }
    throw Error("schedule has no step of the requested kind");
  };
  auto cert_error = [](const std::function<void()>& f) -> std::string {
    try {
      f();
    } catch (const CertificateError& err) {
      return err.what();
    }
    return "";
  };
  const RepresentedMatroid u13 = uniform(1, 3, 2);
  std::vector<Case> cases = {
      {"drop a contraction",
       [&] {
         MinorSchedule s = e.schedule;
         s.steps.erase(s.steps.begin() + first_of(StepKind::kContract));
         return verify(e.n, s, e.certificate);
       }},
      {"drop a deletion",
       [&] {
         MinorSchedule s = e.schedule;
         s.steps.erase(s.steps.begin() + first_of(StepKind::kDelete));
         return verify(e.n, s, e.certificate);
       }},
      {"contraction turned into deletion",
       [&] {
         MinorSchedule s = e.schedule;
         s.steps[first_of(StepKind::kContract)].kind = StepKind::kDelete;
         return verify(e.n, s, e.certificate);
       }},
      {"deletion turned into contraction",
       [&] {
         MinorSchedule s = e.schedule;
         s.steps[first_of(StepKind::kDelete)].kind = StepKind::kContract;
         return verify(e.n, s, e.certificate);
       }},
      {"unknown label in schedule",
       [&] {
         MinorSchedule s = e.schedule;
         s.steps.push_back({StepKind::kDelete, "no-such-element"});
         return verify(e.n, s, e.certificate);
       }},
      {"duplicated step",
       [&] {
         MinorSchedule s = e.schedule;
         s.steps.push_back(s.steps.front());
         return verify(e.n, s, e.certificate);
       }},
      {"extra deletion of an element of M",
       [&] {
         MinorSchedule s = e.schedule;
         s.steps.push_back({StepKind::kDelete, fc.matroid.labels().front()});
         return verify(e.n, s, e.certificate);
       }},
      {"split child removed",
       [&] {
         std::function<bool(DepthCertificate&)> cut = [&](DepthCertificate& c) {
           if (c.kind == DepthCertificate::Kind::kSplit && c.children.size() > 1) {
             c.children.pop_back();
             return true;
           }
           for (DepthCertificate& ch : c.children) {
             if (cut(ch)) return true;
           }
           return false;
         };
         DepthCertificate c = e.certificate;
         if (!cut(c)) return std::string();
         return verify(e.n, e.schedule, c);
       }},
      {"leaf relabeled",
       [&] {
         std::function<bool(DepthCertificate&)> relabel = [&](DepthCertificate& c) {
           if (c.kind == DepthCertificate::Kind::kLeaf) {
             c.element = c.element == "e1.1" ? "e1.2" : "e1.1";
             return true;
           }
           for (DepthCertificate& ch : c.children) {
             if (relabel(ch)) return true;
           }
           return false;
         };
         DepthCertificate c = e.certificate;
         relabel(c);
         return verify(e.n, e.schedule, c);
       }},
      {"split merging two components",
       [&] {
         const DepthCertificate c = parse_certificate(
             "(contract e1 (split (split (leaf e2) (leaf e3))))");
         return cert_error([&] { verify_certificate(u13, c, DepthMode::kCdd); });
       }},
      {"contraction of a loop",
       [&] {
         const DepthCertificate c =
             parse_certificate("(contract e1 (contract e2 (split (leaf e3))))");
         return cert_error([&] { verify_certificate(u13, c, DepthMode::kCdd); });
       }},
      {"deletion in contraction-depth mode",
       [&] {
         const DepthCertificate c = parse_certificate("(delete e1 (delete e2 (leaf e3)))");
         return cert_error([&] { verify_certificate(u13, c, DepthMode::kCd); });
       }},
      {"step on a missing element",
       [&] {
         const DepthCertificate c = parse_certificate("(delete x9 (leaf e3))");
         return cert_error([&] { verify_certificate(u13, c, DepthMode::kCdd); });
       }},
      {"certificate above the claimed bound",
       [&] { return verify(e.n, e.schedule, e.certificate, 1, 0); }},
      {"perturbed representation of N",
       [&] {
         Matrix mat = e.n.matrix();
         const std::size_t col = e.n.index_of("e1.1");
         mat.set(0, col, mat(0, col) == 0 ? 1 : 0);
         return verify(RepresentedMatroid(mat, e.n.labels()), e.schedule, e.certificate);
       }},
  };
  std::size_t rejected = 0;
  std::string accepted;
  for (const Case& c : cases) {
    std::string witness;
    try {
      witness = c.run();
    } catch (const Error& err) {
      witness = err.what();
    }
    if (!witness.empty()) {
      ++rejected;
    } else {
      accepted += (accepted.empty() ? "" : ", ") + c.name;
    }
  }
  res.seconds = since(t0);
  res.pass = rejected == cases.size() && cases.size() >= kMinMutations;
  res.detail = std::to_string(rejected) + "/" + std::to_string(cases.size()) +
               " mutations rejected with a witness";
  if (!accepted.empty()) res.detail += "; accepted: " + accepted;
  return res;
}

}  // namespace

std::vector<std::vector<std::string>> circuit_components(const RepresentedMatroid& m) {
  const std::size_t n = m.size();
  if (n > 20) throw GuardExceeded("circuit components: too many elements");
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto elements = [&](std::uint32_t mask) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    return s;
  };
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const ElementSet s = elements(mask);
    if (m.rank_of(s) != s.size() - 1) continue;  // a circuit has rank |C| - 1
    bool minimal = true;
    for (std::size_t i = 0; i < s.size() && minimal; ++i) {
      ElementSet t = s;
      t.erase(t.begin() + i);
      minimal = m.rank_of(t) == t.size();
    }
    if (!minimal) continue;
    for (std::size_t e : s) parent[find(e)] = find(s.front());
  }
  std::vector<std::vector<std::string>> out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t e = 0; e < n; ++e) {
    const std::size_t root = find(e);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(m.labels()[e]);
  }
  for (auto& block : out) std::sort(block.begin(), block.end());
  std::sort(out.begin(), out.end());
  return out;
}

CriterionResult run_criterion(int id) {
  static const char* kNames[] = {"",
                                 "shared-subspace-properties",
                                 "slack-bound",
                                 "fat-cycle-cdd",
                                 "fat-cycle-embedding",
                                 "per-instance-embedding",
                                 "rooting",
                                 "component-oracle",
                                 "depth-parameter-order",
                                 "mutation-rejection"};
  if (id < 1 || id > 9) throw Error("no criterion " + std::to_string(id));
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = lemma_suite(false); break;
      case 2: r = lemma_suite(true); break;
      case 3: r = fat_cycle_cdd(); break;
      case 4: r = fat_cycle_embedding(); break;
      case 5: r = per_instance_embedding(); break;
      case 6: r = rooting(); break;
      case 7: r = component_oracle(); break;
      case 8: r = depth_order(); break;
      case 9: r = mutations(); break;
    }
  } catch (const Error& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.id = id;
  r.name = kNames[id];
  return r;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + " " +
         r.name + ": " + r.detail + " [" + secs + " s]";
}

std::vector<CriterionResult> run_acceptance(std::ostream& out) {
  std::vector<CriterionResult> all;
  for (int id = 1; id <= 9; ++id) {
    all.push_back(run_criterion(id));
    out << format_result(all.back()) << std::endl;
  }
  return all;
}

}  // namespace cddembed
