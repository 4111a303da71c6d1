// SPDX-License-Identifier: MIT
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fleetcore/asset_ledger.hpp"
#include "fleetcore/csv.hpp"
#include "fleetcore/errors.hpp"
#include "io_util.hpp"

namespace fleetcli {

namespace {

fleetcore::ledger::registry load_registry(const std::string& spec,
                                          std::vector<named_input>& inputs) {
  if (spec == "official") return fleetcore::ledger::registry::official();
  const std::string path =
      spec == "refined" ? resource_path("registry_refined.csv") : spec;
  named_input in = load_input(path);
  std::istringstream stream(in.text);
  inputs.push_back(std::move(in));
  return fleetcore::ledger::registry::parse(stream);
}

}  // namespace

int run_ledger(const ledger_options& opt) {
  if (opt.input.empty() && opt.groups.empty())
    throw fleetcore::validation_error(
        "ledger: provide --input and/or --groups");

  std::string balance_report;
  std::vector<named_input> balance_inputs;
  if (!opt.input.empty()) {
    named_input in = load_input(opt.input);
    std::istringstream stream(in.text);
    balance_inputs.push_back(std::move(in));
    const auto records = fleetcore::ledger::parse_balance_table(stream);
    std::ostringstream out;
    out << csv_metadata(fleetcore::rounding_mode::exact, balance_inputs);
    fleetcore::ledger::write_balance_table(out, records);
    balance_report = out.str();
  }

  std::string structure_report;
  if (!opt.groups.empty()) {
    std::vector<named_input> inputs;
    const fleetcore::ledger::registry reg = load_registry(opt.registry, inputs);
    named_input in = load_input(opt.groups);
    std::istringstream stream(in.text);
    inputs.insert(inputs.begin(), std::move(in));

    const fleetcore::csv::table t = fleetcore::csv::read(stream);
    if (t.header != std::vector<std::string>{"code", "value"})
      throw fleetcore::validation_error("groups header must be: code,value");
    std::vector<fleetcore::ledger::group_value> rows;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.rows[i].size() != 2)
        throw fleetcore::validation_error(
            "line " + std::to_string(t.line_numbers[i]) +
            ": expected 2 fields");
      if (!reg.contains(t.rows[i][0]))
        throw fleetcore::validation_error(
            "line " + std::to_string(t.line_numbers[i]) +
            ": unknown group code " + t.rows[i][0]);
      rows.push_back(
          {t.rows[i][0],
           fleetcore::csv::to_number(t.rows[i][1], t.line_numbers[i])});
    }
    const auto shares = fleetcore::ledger::structure_shares(rows);
    const double active = fleetcore::ledger::active_share(reg, rows);

    std::ostringstream out;
    out << csv_metadata(fleetcore::rounding_mode::exact, inputs);
    out << "# active_share: " << fleetcore::csv::format_number(active) << "\n";
    out << "code,name,activity,value,share\n";
    for (const auto& row : shares) {
      const auto& g = reg.at(row.group);
      out << row.group << ',' << g.name << ','
          << (g.act == fleetcore::ledger::activity::active ? "active"
                                                           : "passive")
          << ',' << fleetcore::csv::format_number(row.value) << ','
          << fleetcore::csv::format_number(row.share) << "\n";
    }
    structure_report = out.str();
  }

  if (!opt.output.empty()) {
    if (balance_report.empty())
      throw fleetcore::validation_error("ledger: --output needs --input");
    write_file_atomic(opt.output, balance_report);
  }
  if (!opt.structure_output.empty()) {
    if (structure_report.empty())
      throw fleetcore::validation_error(
          "ledger: --structure-output needs --groups");
    write_file_atomic(opt.structure_output, structure_report);
  }
  return 0;
}

}  // namespace fleetcli
