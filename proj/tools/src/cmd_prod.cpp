// SPDX-License-Identifier: MIT
#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fleetcore/csv.hpp"
#include "fleetcore/errors.hpp"
#include "fleetcore/productivity.hpp"
#include "io_util.hpp"

namespace fleetcli {

namespace {

namespace prod = fleetcore::prod;
namespace csv = fleetcore::csv;

const std::vector<std::string> observation_header = {
    "enterprise_id",   "year",
    "transport_work",  "tons_carried",
    "revenue",         "profit",
    "fund_value",      "transport_means_value",
    "tonne_days_in_work", "tonne_days_total",
    "loaded_km",       "total_km",
    "listed_tonnage"};

std::vector<prod::fleet_observation> parse_observations(
    const std::string& text) {
  std::istringstream stream(text);
  const csv::table t = csv::read(stream);
  if (t.header != observation_header) {
    std::string expected;
    for (std::size_t i = 0; i < observation_header.size(); ++i) {
      if (i) expected += ',';
      expected += observation_header[i];
    }
    throw fleetcore::validation_error("observation header must be: " +
                                      expected);
  }
  std::vector<prod::fleet_observation> observations;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    const std::size_t line = t.line_numbers[i];
    if (row.size() != observation_header.size())
      throw fleetcore::validation_error(
          "line " + std::to_string(line) + ": expected " +
          std::to_string(observation_header.size()) + " fields");
    prod::fleet_observation o;
    o.enterprise_id = row[0];
    o.year = static_cast<int>(csv::to_integer(row[1], line));
    o.transport_work = csv::to_number(row[2], line);
    o.tons_carried = csv::to_number(row[3], line);
    o.revenue = csv::to_number(row[4], line);
    o.profit = csv::to_number(row[5], line);
    o.fund_value = csv::to_number(row[6], line);
    o.transport_means_value = csv::to_number(row[7], line);
    o.tonne_days_in_work = csv::to_number(row[8], line);
    o.tonne_days_total = csv::to_number(row[9], line);
    o.loaded_km = csv::to_number(row[10], line);
    o.total_km = csv::to_number(row[11], line);
    o.listed_tonnage = csv::to_number(row[12], line);
    prod::validate(o, line);
    observations.push_back(std::move(o));
  }
  return observations;
}

std::string opt_number(const std::optional<double>& value) {
  return value ? csv::format_number(*value) : std::string();
}

void append_ratio_columns(std::ostringstream& out,
                          const prod::derived_ratios_result& r) {
  out << opt_number(r.tkm_per_currency) << ','
      << opt_number(r.tons_per_currency) << ','
      << opt_number(r.revenue_per_currency) << ','
      << opt_number(r.profit_per_currency) << ','
      << opt_number(r.tons_per_listed_tonne) << ','
      << opt_number(r.tkm_per_listed_tonne) << ','
      << opt_number(r.tonne_day_utilization) << ','
      << opt_number(r.mileage_utilization);
}

const char* ratio_columns =
    "tkm_per_currency,tons_per_currency,revenue_per_currency,"
    "profit_per_currency,tons_per_listed_tonne,tkm_per_listed_tonne,"
    "tonne_day_utilization,mileage_utilization";

std::function<double(const prod::fleet_observation&)> band_key_fn(
    const std::string& name) {
  if (name == "tonne_day")
    return [](const prod::fleet_observation& o) {
      return prod::tonne_day_utilization(o.tonne_days_in_work,
                                         o.tonne_days_total);
    };
  if (name == "mileage")
    return [](const prod::fleet_observation& o) {
      return prod::mileage_utilization(o.loaded_km, o.total_km);
    };
  if (name == "fondovidacha")
    return [](const prod::fleet_observation& o) {
      return prod::fondovidacha(o.transport_work, o.fund_value);
    };
  if (name == "work_per_tonne")
    return [](const prod::fleet_observation& o) {
      return o.listed_tonnage > 0 ? o.transport_work / o.listed_tonnage : 0.0;
    };
  throw fleetcore::validation_error(
      "prod: --band-key must be tonne_day, mileage, fondovidacha or "
      "work_per_tonne");
}

std::vector<double> parse_edges(const std::string& text) {
  std::vector<double> edges;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ','))
    edges.push_back(csv::to_number(item, 0));
  if (edges.empty())
    throw fleetcore::validation_error("prod: --band-edges must not be empty");
  return edges;
}

std::string bound(double v) {
  if (v == std::numeric_limits<double>::lowest() ||
      v == std::numeric_limits<double>::max())
    return {};
  return csv::format_number(v);
}

}  // namespace

int run_prod(const prod_options& opt) {
  const bool want_observation_part =
      !opt.output.empty() || !opt.assess_output.empty() ||
      !opt.band_output.empty();
  if (want_observation_part && opt.input.empty())
    throw fleetcore::validation_error("prod: --input is required");
  if (!opt.band_output.empty() &&
      (opt.band_key.empty() || opt.band_edges.empty()))
    throw fleetcore::validation_error(
        "prod: --band-output needs --band-key and --band-edges");
  if (!opt.work.empty() && opt.work_output.empty())
    throw fleetcore::validation_error("prod: --work needs --work-output");
  if (!want_observation_part && opt.work.empty())
    throw fleetcore::validation_error(
        "prod: nothing to do; pass --output, --assess-output, --band-output "
        "or --work");

  std::vector<named_input> inputs;
  std::vector<prod::fleet_observation> observations;
  if (want_observation_part) {
    inputs.push_back(load_input(opt.input));
    observations = parse_observations(inputs.back().text);
  }

  std::string ratios_text;
  if (!opt.output.empty()) {
    std::ostringstream out;
    out << csv_metadata(opt.round, inputs);
    out << "enterprise_id,year," << ratio_columns << "\n";
    for (const auto& o : observations) {
      out << o.enterprise_id << ',' << o.year << ',';
      append_ratio_columns(out, prod::derived_ratios(o));
      out << "\n";
    }
    ratios_text = out.str();
  }

  std::string assess_text;
  if (!opt.assess_output.empty()) {
    std::map<std::string, std::vector<const prod::fleet_observation*>> series;
    for (const auto& o : observations) series[o.enterprise_id].push_back(&o);
    std::ostringstream out;
    out << csv_metadata(opt.round, inputs);
    out << "enterprise_id,period_from,period_to,full,marginal,k,index_form,"
           "quadrant,verdict\n";
    for (auto& [id, rows] : series) {
      std::sort(rows.begin(), rows.end(),
                [](const prod::fleet_observation* a,
                   const prod::fleet_observation* b) { return a->year < b->year; });
      for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto* prev = rows[i - 1];
        const auto* curr = rows[i];
        if (curr->year != prev->year + 1) continue;
        const auto res = prod::efficiency_assessment(
            prev->transport_work, curr->transport_work, prev->fund_value,
            curr->fund_value);
        out << id << ',' << prev->year << ',' << curr->year << ','
            << csv::format_number(res.full) << ','
            << (res.k_finite ? csv::format_number(res.marginal)
                             : std::string())
            << ','
            << (res.k_finite ? csv::format_number(res.k) : std::string())
            << ','
            << (res.index_form_finite ? csv::format_number(res.index_form)
                                      : std::string())
            << ',' << prod::to_string(res.quad) << ','
            << prod::to_string(res.verd) << "\n";
      }
    }
    assess_text = out.str();
  }

  std::string band_text;
  if (!opt.band_output.empty()) {
    const auto key = band_key_fn(opt.band_key);
    const auto edges = parse_edges(opt.band_edges);
    const auto bands = prod::band_and_aggregate(observations, key, edges);
    std::ostringstream out;
    out << csv_metadata(opt.round, inputs);
    out << "# band_key: " << opt.band_key << "\n";
    out << "label,lower,upper,count," << ratio_columns << "\n";
    for (const auto& b : bands) {
      out << b.label << ',' << bound(b.lower) << ',' << bound(b.upper) << ','
          << b.count << ',';
      append_ratio_columns(out, b.ratios);
      out << "\n";
    }
    band_text = out.str();
  }

  std::string work_text;
  if (!opt.work.empty()) {
    inputs.push_back(load_input(opt.work));
    std::istringstream stream(inputs.back().text);
    const csv::table t = csv::read(stream);
    if (t.header !=
        std::vector<std::string>{"tons", "distance_km", "t_norm", "t_fact"})
      throw fleetcore::validation_error(
          "work header must be: tons,distance_km,t_norm,t_fact");
    std::ostringstream out;
    out << csv_metadata(opt.round, {inputs.back()});
    out << "tons,distance_km,t_norm,t_fact,time_ratio,adjusted_work\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const auto& row = t.rows[i];
      const std::size_t line = t.line_numbers[i];
      if (row.size() != 4)
        throw fleetcore::validation_error("line " + std::to_string(line) +
                                          ": expected 4 fields");
      const double tons = csv::to_number(row[0], line);
      const double distance = csv::to_number(row[1], line);
      const double t_norm = csv::to_number(row[2], line);
      const double t_fact = csv::to_number(row[3], line);
      if (t_fact <= 0)
        throw fleetcore::validation_error("line " + std::to_string(line) +
                                          ": t_fact must be positive");
      const double ratio =
          opt.round == fleetcore::rounding_mode::paper
              ? fleetcore::round_significant(t_norm / t_fact, 4)
              : t_norm / t_fact;
      const double work =
          prod::adjusted_transport_work(tons, distance, t_norm, t_fact,
                                        opt.round);
      out << csv::format_number(tons) << ',' << csv::format_number(distance)
          << ',' << csv::format_number(t_norm) << ','
          << csv::format_number(t_fact) << ',' << csv::format_number(ratio)
          << ','
          << (opt.round == fleetcore::rounding_mode::paper
                  ? csv::format_fixed(work, 2)
                  : csv::format_number(work))
          << "\n";
    }
    work_text = out.str();
  }

  if (!ratios_text.empty()) write_file_atomic(opt.output, ratios_text);
  if (!assess_text.empty()) write_file_atomic(opt.assess_output, assess_text);
  if (!band_text.empty()) write_file_atomic(opt.band_output, band_text);
  if (!work_text.empty()) write_file_atomic(opt.work_output, work_text);
  return 0;
}

}  // namespace fleetcli
