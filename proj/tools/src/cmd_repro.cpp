// SPDX-License-Identifier: MIT
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "fleetcore/asset_ledger.hpp"
#include "fleetcore/csv.hpp"
#include "fleetcore/errors.hpp"
#include "fleetcore/reproduction.hpp"
#include "fleetcore/version.hpp"
#include "io_util.hpp"

namespace fleetcli {

namespace {

nlohmann::ordered_json meta_object(const std::vector<named_input>& inputs) {
  nlohmann::ordered_json meta;
  meta["tool"] = "fleetcli";
  meta["version"] = std::string(fleetcore::version);
  nlohmann::ordered_json digests;
  for (const auto& in : inputs) digests[in.name] = in.digest;
  meta["inputs"] = digests;
  return meta;
}

}  // namespace

int run_repro(const repro_options& opt) {
  namespace repro = fleetcore::repro;
  if (opt.input.empty() && opt.chain.empty())
    throw fleetcore::validation_error("repro: provide --input and/or --chain");
  if (opt.convention != "multiplier" && opt.convention != "percent")
    throw fleetcore::validation_error(
        "repro: --convention must be multiplier or percent");

  std::string report_text;
  if (!opt.input.empty()) {
    named_input in = load_input(opt.input);
    std::istringstream stream(in.text);
    const auto records = fleetcore::ledger::parse_balance_table(stream);

    nlohmann::ordered_json doc;
    doc["meta"] = meta_object({in});
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      const repro::report rep = repro::build_report(r);
      nlohmann::ordered_json j;
      j["enterprise_id"] = r.enterprise_id;
      j["period"] = r.period;
      j["renewal_legacy"] = rep.renewal_legacy;
      j["retirement_legacy"] = rep.retirement_legacy;
      j["mean_annual_value"] = rep.mean_annual_value;
      j["renewal"] = rep.renewal;
      j["retirement"] = rep.retirement;
      j["liquidation"] = rep.liquidation;
      if (rep.reproduction_defined)
        j["reproduction"] = rep.reproduction;
      else
        j["reproduction"] = nullptr;
      j["note"] = rep.note;
      reports.push_back(std::move(j));
    }
    doc["reports"] = std::move(reports);
    report_text = doc.dump(2) + "\n";
  }

  std::string chain_text;
  if (!opt.chain.empty()) {
    named_input in = load_input(opt.chain);
    std::istringstream stream(in.text);
    const fleetcore::csv::table t = fleetcore::csv::read(stream);
    if (t.header.size() < 3 || t.header[0] != "period" ||
        t.header[1] != "price_step" || t.header[2] != "asset_step")
      throw fleetcore::validation_error(
          "chain header must start with: period,price_step,asset_step");
    std::vector<std::string> labels;
    std::vector<double> price_steps, asset_steps;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const auto& row = t.rows[i];
      const std::size_t line = t.line_numbers[i];
      if (row.size() < 3)
        throw fleetcore::validation_error("line " + std::to_string(line) +
                                          ": expected 3 fields");
      labels.push_back(row[0]);
      price_steps.push_back(fleetcore::csv::to_number(row[1], line));
      asset_steps.push_back(fleetcore::csv::to_number(row[2], line));
    }
    const repro::step_convention conv = opt.convention == "percent"
                                            ? repro::step_convention::percent
                                            : repro::step_convention::multiplier;
    const repro::index_chain price =
        repro::chain_indices(labels, price_steps, conv);
    const repro::index_chain asset =
        repro::chain_indices(labels, asset_steps, conv);

    std::ostringstream out;
    out << csv_metadata(fleetcore::rounding_mode::exact, {in});
    out << "# convention: " << opt.convention << "\n";
    out << "period,price_step,asset_step,price_cumulative,asset_cumulative,gap\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const double gap =
          repro::indexation_gap(price.cumulative[i], asset.cumulative[i]);
      out << labels[i] << ','
          << fleetcore::csv::format_number(price_steps[i]) << ','
          << fleetcore::csv::format_number(asset_steps[i]) << ','
          << fleetcore::csv::format_number(price.cumulative[i]) << ','
          << fleetcore::csv::format_number(asset.cumulative[i]) << ','
          << fleetcore::csv::format_number(gap) << "\n";
    }
    chain_text = out.str();
  }

  if (!opt.output.empty()) {
    if (report_text.empty())
      throw fleetcore::validation_error("repro: --output needs --input");
    write_file_atomic(opt.output, report_text);
  }
  if (!opt.chain_output.empty()) {
    if (chain_text.empty())
      throw fleetcore::validation_error(
          "repro: --chain-output needs --chain");
    write_file_atomic(opt.chain_output, chain_text);
  }
  return 0;
}

}  // namespace fleetcli
