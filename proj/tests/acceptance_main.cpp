// SPDX-License-Identifier: MIT
// Acceptance gate: runs the embedded reference checks and reports them
// grouped by criterion, one verdict line each. Exits non-zero when any
// criterion has a failing check, which makes the gate a regular test.
#include <cstdio>
#include <map>
#include <vector>

#include "fleetcore/csv.hpp"
#include "golden_suite.hpp"

int main() {
  const std::vector<fleetcli::check_result> checks = fleetcli::run_golden_suite();

  std::map<int, std::vector<const fleetcli::check_result*>> by_criterion;
  for (const auto& c : checks) by_criterion[c.criterion].push_back(&c);

  int failed_criteria = 0;
  for (const auto& [criterion, group] : by_criterion) {
    std::size_t passed = 0;
    for (const auto* c : group) passed += c->pass ? 1 : 0;
    const bool ok = passed == group.size();
    failed_criteria += ok ? 0 : 1;
    std::printf("criterion %2d: %s  (%zu/%zu checks)\n", criterion,
                ok ? "PASS" : "FAIL", passed, group.size());
    for (const auto* c : group) {
      if (c->pass) continue;
      std::printf("    FAIL %s expected %s actual %s tol %s  %s\n",
                  c->id.c_str(),
                  fleetcore::csv::format_number(c->expected).c_str(),
                  fleetcore::csv::format_number(c->actual).c_str(),
                  fleetcore::csv::format_number(c->tolerance).c_str(),
                  c->detail.c_str());
    }
  }
  std::printf("%zu criteria: %zu passed, %d failed\n", by_criterion.size(),
              by_criterion.size() - static_cast<std::size_t>(failed_criteria),
              failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
