#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace cyclemix {

struct SuiteResult {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
};

std::vector<std::string> suite_names();

/// Runs the named invariant suite, streaming one line per check to log.
/// n_max < 0 keeps each check's default scale. Unknown names throw
/// std::invalid_argument.
SuiteResult run_suite(const std::string& name, int n_max, std::ostream& log);

}  // namespace cyclemix
