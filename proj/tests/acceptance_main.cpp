// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "cddembed/acceptance.hpp"

int main(int argc, char** argv) {
  if (argc > 1) {
    bool ok = true;
    for (int i = 1; i < argc; ++i) {
      const cddembed::CriterionResult r = cddembed::run_criterion(std::atoi(argv[i]));
      std::cout << cddembed::format_result(r) << std::endl;
      ok = ok && r.pass;
    }
    return ok ? 0 : 1;
  }
  bool ok = true;
  for (const cddembed::CriterionResult& r : cddembed::run_acceptance(std::cout)) ok = ok && r.pass;
  return ok ? 0 : 1;
}
