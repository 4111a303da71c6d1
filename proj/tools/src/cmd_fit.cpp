// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "fleetcore/csv.hpp"
#include "fleetcore/econometrics.hpp"
#include "fleetcore/errors.hpp"
#include "fleetcore/version.hpp"
#include "io_util.hpp"
#include "sample_io.hpp"

namespace fleetcli {

namespace {

namespace econ = fleetcore::econ;
namespace csv = fleetcore::csv;

nlohmann::ordered_json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

nlohmann::ordered_json vector_json(const std::vector<double>& values) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (double v : values) arr.push_back(number_or_null(v));
  return arr;
}

}  // namespace

econ::sample parse_sample(const std::string& text, std::size_t* n_rows) {
  std::istringstream stream(text);
  const csv::table t = csv::read(stream);
  std::vector<std::size_t> x_index;
  std::size_t y_index = t.header.size();
  std::size_t w_index = t.header.size();
  for (std::size_t k = 1;; ++k) {
    const std::string name = "x" + std::to_string(k);
    const auto it = std::find(t.header.begin(), t.header.end(), name);
    if (it == t.header.end()) break;
    x_index.push_back(static_cast<std::size_t>(it - t.header.begin()));
  }
  for (std::size_t j = 0; j < t.header.size(); ++j) {
    if (t.header[j] == "y") y_index = j;
    if (t.header[j] == "weight") w_index = j;
    if (t.header[j] != "y" && t.header[j] != "weight" &&
        t.header[j] != "enterprise_id" &&
        !(t.header[j].size() >= 2 && t.header[j][0] == 'x' &&
          std::all_of(t.header[j].begin() + 1, t.header[j].end(),
                      [](char c) { return c >= '0' && c <= '9'; })))
      throw fleetcore::validation_error(
          "sample: unknown column " + t.header[j] +
          " (expected enterprise_id, x1..xk, y, weight)");
  }
  if (x_index.empty())
    throw fleetcore::validation_error("sample: no factor columns x1..xk");
  if (y_index == t.header.size())
    throw fleetcore::validation_error("sample: missing column y");

  econ::sample s;
  s.x.resize(x_index.size());
  const bool weighted = w_index != t.header.size();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    const std::size_t line = t.line_numbers[i];
    if (row.size() != t.header.size())
      throw fleetcore::validation_error("line " + std::to_string(line) +
                                        ": expected " +
                                        std::to_string(t.header.size()) +
                                        " fields");
    for (std::size_t j = 0; j < x_index.size(); ++j)
      s.x[j].push_back(csv::to_number(row[x_index[j]], line));
    s.y.push_back(csv::to_number(row[y_index], line));
    if (weighted) s.w.push_back(csv::to_number(row[w_index], line));
  }
  econ::validate(s);
  if (n_rows) *n_rows = s.size();
  return s;
}

econ::sample select_factor(const econ::sample& s, std::size_t x_col) {
  if (x_col < 1 || x_col > s.factors())
    throw fleetcore::validation_error(
        "x column " + std::to_string(x_col) + " out of range (sample has " +
        std::to_string(s.factors()) + " factors)");
  econ::sample out;
  out.x.push_back(s.x[x_col - 1]);
  out.y = s.y;
  out.w = s.w;
  return out;
}

econ::regression_model fit_sample(const econ::sample& s,
                                  const std::string& form, std::size_t x_col,
                                  double t_value) {
  if (form == "linear") return econ::fit_linear(select_factor(s, x_col), t_value);
  if (form == "parabola")
    return econ::fit_parabola(select_factor(s, x_col), t_value);
  if (form == "multilinear") return econ::fit_multilinear(s, t_value);
  throw fleetcore::validation_error(
      "fit: --form must be linear, parabola or multilinear");
}

int run_fit(const fit_options& opt) {
  if (opt.input.empty())
    throw fleetcore::validation_error("fit: --input is required");
  if (opt.output.empty())
    throw fleetcore::validation_error("fit: --output is required");

  std::vector<named_input> inputs;
  inputs.push_back(load_input(opt.input));
  const econ::sample s = parse_sample(inputs[0].text, nullptr);
  const econ::regression_model m =
      fit_sample(s, opt.form, opt.x_col, opt.t_value);

  const std::string table_path =
      opt.f_table.empty() ? resource_path("f_critical_05.csv") : opt.f_table;
  inputs.push_back(load_input(table_path));
  std::istringstream table_stream(inputs.back().text);
  const econ::f_table table = econ::parse_f_table(table_stream);

  const std::size_t k = m.form == econ::model_form::multilinear
                            ? m.coef.size() - 1
                            : 1;
  const double df2 = m.n_eff - static_cast<double>(k) - 1.0;
  double critical = 0;
  bool have_critical = false;
  if (df2 >= 1.0) {
    critical = econ::f_critical(table, static_cast<int>(k), df2);
    have_critical = true;
  }

  nlohmann::ordered_json doc;
  nlohmann::ordered_json meta;
  meta["tool"] = "fleetcli";
  meta["version"] = std::string(fleetcore::version);
  nlohmann::ordered_json digests;
  for (const auto& i : inputs) digests[i.name] = i.digest;
  meta["inputs"] = digests;
  doc["meta"] = std::move(meta);
  doc["form"] = econ::to_string(m.form);
  doc["n"] = s.size();
  doc["n_eff"] = m.n_eff;
  doc["coef"] = vector_json(m.coef);
  doc["slope_std_error"] = vector_json(m.slope_std_error);
  doc["marginal_error"] = vector_json(m.marginal_error);
  doc["confidence_low"] = vector_json(m.confidence_low);
  doc["confidence_high"] = vector_json(m.confidence_high);
  doc["t_value"] = m.t_value;
  doc["pearson"] = number_or_null(m.pearson);
  doc["eta"] = m.eta;
  doc["determination"] = m.determination;
  if (m.f_finite)
    doc["f_statistic"] = m.f_statistic;
  else
    doc["f_statistic"] = nullptr;
  doc["f_finite"] = m.f_finite;
  if (have_critical) {
    doc["f_critical"] = critical;
    doc["significant"] = m.f_finite ? m.f_statistic > critical : true;
  } else {
    doc["f_critical"] = nullptr;
    doc["significant"] = nullptr;
  }
  doc["elasticity"] = vector_json(m.elasticity);
  doc["mean_x"] = vector_json(m.mean_x);
  doc["mean_y"] = number_or_null(m.mean_y);
  if (m.form == econ::model_form::parabola) {
    try {
      doc["extremum_x"] = econ::parabola_extremum(m);
    } catch (const fleetcore::numeric_error&) {
      doc["extremum_x"] = nullptr;
    }
  }

  write_file_atomic(opt.output, doc.dump(2) + "\n");
  return 0;
}

}  // namespace fleetcli
