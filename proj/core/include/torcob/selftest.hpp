#pragma once

#include <string>
#include <vector>

namespace torcob {

struct CheckResult {
  std::string name;
  bool pass = false;
  double ms = 0.0;
  std::string detail;  // what was covered, or the first failing comparison
};

// Acceptance suite: exact cross-checks of the implemented rings on the
// bundled fans, including an independent integer-linear-algebra oracle for
// the additive quotients. coeff_bound sets the truncation depth of the
// rational-law runs. Checks never throw; an exception inside one is
// reported as its failure.
std::vector<CheckResult> run_selftest(int coeff_bound = 3);

}  // namespace torcob
