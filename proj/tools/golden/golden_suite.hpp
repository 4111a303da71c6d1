// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

namespace fleetcli {

// One self-test against an embedded reference value. ids group by criterion:
// c04.uniform-charges is the uniform-charge check of criterion 4.
struct check_result {
  std::string id;
  int criterion = 0;
  std::string detail;
  double expected = 0;
  double actual = 0;
  double tolerance = 0;
  bool pass = false;
};

// Runs every embedded check. Failures are data, not errors: the vector always
// holds the complete suite. The final entry times the suite itself.
std::vector<check_result> run_golden_suite();

// The embedded reference-value file (JSON text).
const char* golden_data();

}  // namespace fleetcli
