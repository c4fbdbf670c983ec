#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cddembed/matroid.hpp"

namespace cddembed {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs criterion `id` (1-9).
CriterionResult run_criterion(int id);

// Runs all criteria in order, printing one line per criterion to out.
std::vector<CriterionResult> run_acceptance(std::ostream& out);

std::string format_result(const CriterionResult& r);

// Components by brute force: elements are joined when some circuit contains
// both. Exponential; meant for at most ~12 elements.
std::vector<std::vector<std::string>> circuit_components(const RepresentedMatroid& m);

}  // namespace cddembed
