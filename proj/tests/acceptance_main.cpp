// Acceptance gate: one line per check, nonzero exit if any fails or takes
// longer than its 10-second budget.

#include "torcob/selftest.hpp"

#include <cstdio>
#include <string>

int main(int argc, char** argv) {
  int coeff_bound = 3;
  if (argc > 1) coeff_bound = std::stoi(argv[1]);

  bool ok = true;
  for (const torcob::CheckResult& r : torcob::run_selftest(coeff_bound)) {
    bool in_budget = r.ms < 10000.0;
    ok = ok && r.pass && in_budget;
    std::printf("%s %-55s %8.1f ms%s%s\n",
                r.pass && in_budget ? "PASS" : "FAIL", r.name.c_str(), r.ms,
                r.detail.empty() ? "" : "  ", r.detail.c_str());
  }
  return ok ? 0 : 1;
}
