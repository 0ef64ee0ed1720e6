#pragma once

#include <string>
#include <vector>

namespace cantor::selfcheck {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // filled in on failure
};

// Named property checks over every module, sized to finish in seconds.
// Randomized checks draw from the given seed, so runs are reproducible.
std::vector<CheckResult> run_all(unsigned seed = 20240901);

}  // namespace cantor::selfcheck
