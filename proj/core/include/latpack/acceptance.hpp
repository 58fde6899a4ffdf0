// The acceptance suite: every release criterion as a timed pass/fail check,
// shared by `latpack report all` and the acceptance test binary.
#pragma once

#include <string>
#include <vector>

namespace latpack {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

// Runs all criteria in dependency order and returns them sorted by id.
std::vector<CriterionResult> run_acceptance();

}  // namespace latpack
