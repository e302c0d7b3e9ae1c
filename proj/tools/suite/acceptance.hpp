#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hankelray::accept {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;  // filled on failure
};

// Runs the full verification suite, printing one pass/fail line per
// criterion to `out`. The seed drives the randomized property suites only.
std::vector<CriterionResult> run_all(std::uint64_t seed, std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace hankelray::accept
