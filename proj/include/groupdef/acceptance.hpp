#pragma once

#include <string>
#include <vector>

namespace groupdef {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail; // stats on success, first counterexample on failure
};

// Runs the full verification suite.  max_order > 0 additionally restricts
// every check to catalog groups of at most that order (each check also has
// its own documented scope).
std::vector<CriterionResult> run_acceptance(int max_order = 0);

} // namespace groupdef
