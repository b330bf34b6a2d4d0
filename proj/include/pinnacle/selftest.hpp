#pragma once

#include <string>
#include <vector>

namespace pinnacle {

struct SelftestResult {
  int checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Oracle-equivalence sweep for n = 1..max_n: the four counting algorithms
/// against exhaustive counts, total mass n!, per-ordering decomposition,
/// ordering counts against realized orders, and vale families.
SelftestResult run_selftest(int max_n);

}  // namespace pinnacle
