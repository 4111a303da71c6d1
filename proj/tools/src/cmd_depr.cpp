// SPDX-License-Identifier: MIT
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "fleetcore/csv.hpp"
#include "fleetcore/depreciation.hpp"
#include "fleetcore/errors.hpp"
#include "fleetcore/version.hpp"
#include "io_util.hpp"

namespace fleetcli {

namespace {

namespace depr = fleetcore::depr;
namespace csv = fleetcore::csv;

std::vector<double> split_list(const std::string& field, std::size_t line) {
  std::vector<double> values;
  std::string item;
  std::istringstream stream(field);
  while (std::getline(stream, item, ';'))
    values.push_back(csv::to_number(item, line));
  return values;
}

bool looks_like_json(const std::string& path, const std::string& text) {
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") return true;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

struct scenario_input {
  depr::vehicle_scenario scenario;
  std::optional<std::vector<double>> material_column;
};

scenario_input parse_scenario_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw fleetcore::validation_error(std::string("scenario JSON: ") +
                                      e.what());
  }
  scenario_input in;
  auto number = [&](const char* key, double fallback,
                    bool required = false) -> double {
    if (!doc.contains(key)) {
      if (required)
        throw fleetcore::validation_error(
            std::string("scenario JSON: missing field ") + key);
      return fallback;
    }
    if (!doc[key].is_number())
      throw fleetcore::validation_error(std::string("scenario JSON: field ") +
                                        key + " must be a number");
    return doc[key].get<double>();
  };
  auto list = [&](const char* key) -> std::vector<double> {
    if (!doc.contains(key)) return {};
    if (!doc[key].is_array())
      throw fleetcore::validation_error(std::string("scenario JSON: field ") +
                                        key + " must be an array");
    std::vector<double> values;
    for (const auto& v : doc[key]) {
      if (!v.is_number())
        throw fleetcore::validation_error(
            std::string("scenario JSON: field ") + key +
            " must contain numbers");
      values.push_back(v.get<double>());
    }
    return values;
  };
  depr::vehicle_scenario& sc = in.scenario;
  sc.initial_value = number("initial_value", 0, true);
  sc.base_rate = number("base_rate", 0, true);
  sc.acceleration = number("acceleration", 1.0);
  sc.annual_mileage = list("annual_mileage");
  if (sc.annual_mileage.empty())
    throw fleetcore::validation_error(
        "scenario JSON: annual_mileage must be a non-empty array");
  sc.discount_rate = number("discount_rate", 0);
  sc.liquidation_value = number("liquidation_value", 0);
  sc.side_gains = list("side_gains");
  sc.material_base = number("material_base", 0);
  sc.cost_slope = number("cost_slope", 0);
  sc.fixed_cost = number("fixed_cost", 0);
  const auto material = list("material_column");
  if (!material.empty()) in.material_column = material;
  return in;
}

scenario_input parse_scenario_csv(const std::string& text) {
  std::istringstream stream(text);
  const csv::table t = csv::read(stream);
  if (t.header != std::vector<std::string>{"key", "value"})
    throw fleetcore::validation_error("scenario CSV header must be: key,value");
  scenario_input in;
  depr::vehicle_scenario& sc = in.scenario;
  bool have_value = false, have_rate = false, have_mileage = false;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    const std::size_t line = t.line_numbers[i];
    if (row.size() != 2)
      throw fleetcore::validation_error("line " + std::to_string(line) +
                                        ": expected 2 fields");
    const std::string& key = row[0];
    const std::string& value = row[1];
    if (key == "initial_value") {
      sc.initial_value = csv::to_number(value, line);
      have_value = true;
    } else if (key == "base_rate") {
      sc.base_rate = csv::to_number(value, line);
      have_rate = true;
    } else if (key == "acceleration") {
      sc.acceleration = csv::to_number(value, line);
    } else if (key == "annual_mileage") {
      sc.annual_mileage = split_list(value, line);
      have_mileage = true;
    } else if (key == "discount_rate") {
      sc.discount_rate = csv::to_number(value, line);
    } else if (key == "liquidation_value") {
      sc.liquidation_value = csv::to_number(value, line);
    } else if (key == "side_gains") {
      sc.side_gains = split_list(value, line);
    } else if (key == "material_base") {
      sc.material_base = csv::to_number(value, line);
    } else if (key == "cost_slope") {
      sc.cost_slope = csv::to_number(value, line);
    } else if (key == "fixed_cost") {
      sc.fixed_cost = csv::to_number(value, line);
    } else if (key == "material_column") {
      in.material_column = split_list(value, line);
    } else {
      throw fleetcore::validation_error("line " + std::to_string(line) +
                                        ": unknown scenario key " + key);
    }
  }
  if (!have_value || !have_rate || !have_mileage)
    throw fleetcore::validation_error(
        "scenario CSV: initial_value, base_rate and annual_mileage are "
        "mandatory");
  return in;
}

std::vector<double> parse_material_file(const std::string& text,
                                        std::size_t periods) {
  std::istringstream stream(text);
  const csv::table t = csv::read(stream);
  if (t.header != std::vector<std::string>{"period", "material"})
    throw fleetcore::validation_error(
        "material file header must be: period,material");
  if (t.rows.size() != periods)
    throw fleetcore::validation_error(
        "material file: expected " + std::to_string(periods) + " rows, got " +
        std::to_string(t.rows.size()));
  std::vector<double> column(periods, 0);
  std::vector<bool> seen(periods, false);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    const std::size_t line = t.line_numbers[i];
    if (row.size() != 2)
      throw fleetcore::validation_error("line " + std::to_string(line) +
                                        ": expected 2 fields");
    const long period = csv::to_integer(row[0], line);
    if (period < 1 || period > static_cast<long>(periods))
      throw fleetcore::validation_error("line " + std::to_string(line) +
                                        ": period out of range");
    if (seen[period - 1])
      throw fleetcore::validation_error("line " + std::to_string(line) +
                                        ": duplicate period");
    seen[period - 1] = true;
    column[period - 1] = csv::to_number(row[1], line);
  }
  return column;
}

std::string money(double v, fleetcore::rounding_mode mode) {
  return mode == fleetcore::rounding_mode::paper ? csv::format_fixed(v, 2)
                                                 : csv::format_number(v);
}

std::string factor(double v, fleetcore::rounding_mode mode) {
  return mode == fleetcore::rounding_mode::paper ? csv::format_fixed(v, 3)
                                                 : csv::format_number(v);
}

}  // namespace

int run_depr(const depr_options& opt) {
  if (opt.scenario.empty())
    throw fleetcore::validation_error("depr: --scenario is required");
  if (opt.method != "uniform" && opt.method != "degressive")
    throw fleetcore::validation_error(
        "depr: --method must be uniform or degressive");
  depr::mileage_anchor anchor = depr::mileage_anchor::period_start;
  if (opt.material_anchor == "mid")
    anchor = depr::mileage_anchor::period_mid;
  else if (opt.material_anchor == "end")
    anchor = depr::mileage_anchor::period_end;
  else if (opt.material_anchor != "start")
    throw fleetcore::validation_error(
        "depr: --material-anchor must be start, mid or end");

  std::vector<named_input> inputs;
  inputs.push_back(load_input(opt.scenario));
  scenario_input in = looks_like_json(opt.scenario, inputs[0].text)
                          ? parse_scenario_json(inputs[0].text)
                          : parse_scenario_csv(inputs[0].text);
  if (!opt.material_file.empty()) {
    inputs.push_back(load_input(opt.material_file));
    in.material_column = parse_material_file(
        inputs.back().text, in.scenario.annual_mileage.size());
  }
  depr::validate(in.scenario);

  const depr::schedule sched =
      opt.method == "degressive"
          ? depr::degressive_schedule(in.scenario, opt.round)
          : depr::uniform_schedule(in.scenario, opt.round);

  std::string schedule_text;
  if (!opt.output.empty()) {
    std::ostringstream out;
    out << csv_metadata(opt.round, inputs);
    out << "# method: " << opt.method << "\n";
    out << "period,mileage,charge,residual,factor,present_value\n";
    double total_km = 0;
    for (const auto& row : sched.rows) {
      total_km += row.mileage;
      out << row.period << ',' << csv::format_number(row.mileage) << ','
          << money(row.charge, opt.round) << ','
          << money(row.residual, opt.round) << ','
          << factor(row.discount_factor, opt.round) << ','
          << money(row.present_value, opt.round) << "\n";
    }
    out << "total," << csv::format_number(total_km) << ','
        << money(sched.nominal_sum, opt.round) << ','
        << money(sched.rows.back().residual, opt.round) << ",,"
        << money(sched.discounted_sum, opt.round) << "\n";
    schedule_text = out.str();
  }

  std::string summary_text;
  if (!opt.summary.empty()) {
    const double ndv = depr::net_discounted_value(
        in.scenario, sched, opt.salvage_inflow, opt.round);
    double total_km = 0;
    for (double l : in.scenario.annual_mileage) total_km += l;
    const double threshold = opt.loss_threshold > 0
                                 ? opt.loss_threshold
                                 : depr::default_loss_threshold_km;
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta;
    meta["tool"] = "fleetcli";
    meta["version"] = std::string(fleetcore::version);
    meta["rounding"] = to_string(opt.round);
    nlohmann::ordered_json digests;
    for (const auto& i : inputs) digests[i.name] = i.digest;
    meta["inputs"] = digests;
    doc["meta"] = std::move(meta);
    doc["method"] = opt.method;
    doc["nominal_sum"] = sched.nominal_sum;
    doc["discounted_sum"] = sched.discounted_sum;
    doc["net_discounted_value"] = ndv;
    doc["salvage_as_inflow"] = opt.salvage_inflow;
    doc["nominal_share_percent"] =
        100.0 * sched.nominal_sum / in.scenario.initial_value;
    doc["discounted_share_percent"] =
        100.0 * sched.discounted_sum / in.scenario.initial_value;
    doc["charge_capped"] = sched.capped;
    doc["cumulative_km"] = total_km;
    doc["loss_threshold_km"] = threshold;
    doc["zone"] = depr::profitability_zone(total_km, threshold) ==
                          depr::zone::loss_zone
                      ? "loss_zone"
                      : "normal";
    summary_text = doc.dump(2) + "\n";
  }

  std::string cost_text;
  if (!opt.cost_output.empty()) {
    const auto method = opt.method == "degressive" ? depr::charge_method::degressive
                                                   : depr::charge_method::uniform;
    const auto rows = depr::cost_per_km_table(in.scenario, method,
                                              in.material_column, opt.round,
                                              anchor);
    std::ostringstream out;
    out << csv_metadata(opt.round, inputs);
    out << "# method: " << opt.method << "\n";
    out << "# material: "
        << (in.material_column ? "explicit column" : "exponential model")
        << "\n";
    out << "period,mileage,material,amortization_load,total\n";
    for (const auto& row : rows) {
      out << row.period << ',' << csv::format_number(row.mileage) << ','
          << money(row.material, opt.round) << ','
          << money(row.amortization_load, opt.round) << ','
          << money(row.total, opt.round) << "\n";
    }
    cost_text = out.str();
  }

  if (!schedule_text.empty()) write_file_atomic(opt.output, schedule_text);
  if (!summary_text.empty()) write_file_atomic(opt.summary, summary_text);
  if (!cost_text.empty()) write_file_atomic(opt.cost_output, cost_text);
  return 0;
}

}  // namespace fleetcli
