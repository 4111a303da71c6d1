// SPDX-License-Identifier: MIT
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "fleetcore/csv.hpp"
#include "fleetcore/version.hpp"
#include "golden_suite.hpp"
#include "io_util.hpp"

namespace fleetcli {

int run_golden(const golden_options& opt) {
  const std::vector<check_result> results = run_golden_suite();
  int failures = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    std::printf("%s %s expected %s actual %s tol %s  %s\n",
                r.pass ? "PASS" : "FAIL", r.id.c_str(),
                fleetcore::csv::format_number(r.expected).c_str(),
                fleetcore::csv::format_number(r.actual).c_str(),
                fleetcore::csv::format_number(r.tolerance).c_str(),
                r.detail.c_str());
  }
  std::printf("%zu checks, %d failed\n", results.size(), failures);

  if (!opt.output.empty()) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta;
    meta["tool"] = "fleetcli";
    meta["version"] = std::string(fleetcore::version);
    nlohmann::ordered_json digests;
    digests["golden"] = digest_label(golden_data());
    meta["inputs"] = std::move(digests);
    doc["meta"] = std::move(meta);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json c;
      c["id"] = r.id;
      c["criterion"] = r.criterion;
      c["detail"] = r.detail;
      c["expected"] = r.expected;
      c["actual"] = r.actual;
      c["tolerance"] = r.tolerance;
      c["pass"] = r.pass;
      checks.push_back(std::move(c));
    }
    doc["checks"] = std::move(checks);
    doc["failures"] = failures;
    write_file_atomic(opt.output, doc.dump(2) + "\n");
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace fleetcli
