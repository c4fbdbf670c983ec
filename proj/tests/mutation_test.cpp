#include <gtest/gtest.h>

#include <functional>

#include "cddembed/depth.hpp"
#include "cddembed/embedding.hpp"
#include "cddembed/error.hpp"
#include "cddembed/generators.hpp"

namespace cddembed {
namespace {

class MutationTest : public ::testing::Test {
 protected:
  MutationTest() : fc_(fat_cycle(3)), e_(embed(fc_.matroid, fc_.tree, 2, 1)) {}

  // Failing checks of verify_embedding, as "name: detail".
  std::vector<std::string> failures(const MinorSchedule& s, const DepthCertificate& c) const {
    std::vector<std::string> out;
    for (const CheckOutcome& o : verify_embedding(e_.n, s, c, fc_.matroid, 2, 1).checks) {
      if (!o.pass) out.push_back(o.name + ": " + o.detail);
    }
    return out;
  }

  FatCycle fc_;
  EmbeddingResult e_;
};

TEST_F(MutationTest, BaselinePasses) { EXPECT_TRUE(failures(e_.schedule, e_.certificate).empty()); }

TEST_F(MutationTest, ScheduleMutationsAreRejected) {
  std::vector<std::pair<std::string, std::function<void(MinorSchedule&)>>> cases = {
      {"drop-first", [](MinorSchedule& s) { s.steps.erase(s.steps.begin()); }},
      {"drop-last", [](MinorSchedule& s) { s.steps.pop_back(); }},
      {"flip-first",
       [](MinorSchedule& s) {
         auto& k = s.steps.front().kind;
         k = k == StepKind::kContract ? StepKind::kDelete : StepKind::kContract;
       }},
      {"flip-last",
       [](MinorSchedule& s) {
         auto& k = s.steps.back().kind;
         k = k == StepKind::kContract ? StepKind::kDelete : StepKind::kContract;
       }},
      {"delete-original", [](MinorSchedule& s) { s.steps.push_back({StepKind::kDelete, "e1.1"}); }},
      {"contract-original",
       [](MinorSchedule& s) { s.steps.push_back({StepKind::kContract, "e2.2"}); }},
      {"unknown-label", [](MinorSchedule& s) { s.steps.front().label = "nope"; }},
      {"repeat-step", [](MinorSchedule& s) { s.steps.push_back(s.steps.front()); }},
  };
  for (auto& [name, mutate] : cases) {
    MinorSchedule s = e_.schedule;
    mutate(s);
    const auto f = failures(s, e_.certificate);
    ASSERT_FALSE(f.empty()) << name;
    EXPECT_NE(f.front().find("minor-recovery"), std::string::npos) << name << ": " << f.front();
    EXPECT_GT(f.front().size(), std::string("minor-recovery: ").size()) << name;
  }
}

std::string first_leaf(const DepthCertificate& c) {
  if (c.kind == DepthCertificate::Kind::kLeaf) return c.element;
  for (const DepthCertificate& ch : c.children) {
    const std::string s = first_leaf(ch);
    if (!s.empty()) return s;
  }
  return "";
}

DepthCertificate* first_split(DepthCertificate& c) {
  if (c.kind == DepthCertificate::Kind::kSplit && c.children.size() >= 2) return &c;
  for (DepthCertificate& ch : c.children) {
    if (DepthCertificate* s = first_split(ch)) return s;
  }
  return nullptr;
}

TEST_F(MutationTest, CertificateMutationsAreRejectedWithPath) {
  std::vector<std::pair<std::string, std::function<void(DepthCertificate&)>>> cases = {
      {"merge-split-children",
       [](DepthCertificate& c) {
         DepthCertificate* s = first_split(c);
         ASSERT_NE(s, nullptr);
         s->children.pop_back();
       }},
      {"duplicate-split-child",
       [](DepthCertificate& c) {
         DepthCertificate* s = first_split(c);
         ASSERT_NE(s, nullptr);
         s->children.push_back(s->children.front());
       }},
      {"rename-leaf",
       [](DepthCertificate& c) {
         const std::string leaf = first_leaf(c);
         c = parse_certificate([&] {
           std::string t = format_certificate(c);
           t.replace(t.find("(leaf " + leaf + ")"), leaf.size() + 7, "(leaf ghost)");
           return t;
         }());
       }},
      {"wrap-in-contract-of-missing",
       [](DepthCertificate& c) { c = DepthCertificate::step(StepKind::kContract, "ghost", c); }},
      {"leaf-at-root", [](DepthCertificate& c) { c = DepthCertificate::leaf("e1.1"); }},
  };
  for (auto& [name, mutate] : cases) {
    DepthCertificate c = e_.certificate;
    mutate(c);
    try {
      verify_certificate(e_.n, c, DepthMode::kCdd);
      ADD_FAILURE() << name << " accepted";
    } catch (const CertificateError& err) {
      EXPECT_EQ(err.path().rfind("root", 0), 0u) << name << ": " << err.path();
    }
    const auto f = failures(e_.schedule, c);
    ASSERT_FALSE(f.empty()) << name;
    EXPECT_NE(f.front().find("certificate"), std::string::npos) << name << ": " << f.front();
  }
}

TEST_F(MutationTest, LoopContractionIsRejected) {
  // Contract both copies of a parallel pair: the second is a loop by then.
  const RepresentedMatroid pair = uniform(1, 2, 2);
  const DepthCertificate c = parse_certificate("(contract e1 (contract e2 (split)))");
  try {
    verify_certificate(pair, c, DepthMode::kCdd);
    FAIL();
  } catch (const CertificateError& err) {
    EXPECT_EQ(err.path(), "root/contract:e1/contract:e2");
  }
}

TEST_F(MutationTest, WrongBoundIsRejected) {
  // The genuine certificate against a claimed depth 0, width 0 bound of 1.
  const EmbeddingVerification v =
      verify_embedding(e_.n, e_.schedule, e_.certificate, fc_.matroid, 0, 0);
  EXPECT_FALSE(v.ok());
}

}  // namespace
}  // namespace cddembed
