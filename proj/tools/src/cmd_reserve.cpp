// SPDX-License-Identifier: MIT
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fleetcore/csv.hpp"
#include "fleetcore/econometrics.hpp"
#include "fleetcore/errors.hpp"
#include "io_util.hpp"
#include "sample_io.hpp"

namespace fleetcli {

namespace {

namespace econ = fleetcore::econ;
namespace csv = fleetcore::csv;

econ::reserve_mode parse_mode(const std::string& name) {
  if (name == "minimal") return econ::reserve_mode::minimal;
  if (name == "optimal") return econ::reserve_mode::optimal;
  if (name == "maximal") return econ::reserve_mode::maximal;
  throw fleetcore::validation_error(
      "reserve: --mode must be minimal, optimal or maximal");
}

}  // namespace

int run_reserve(const reserve_options& opt) {
  if (opt.input.empty())
    throw fleetcore::validation_error("reserve: --input is required");
  if (opt.output.empty())
    throw fleetcore::validation_error("reserve: --output is required");
  if (opt.form != "linear" && opt.form != "multilinear")
    throw fleetcore::validation_error(
        "reserve: --form must be linear or multilinear");
  const econ::reserve_mode mode = parse_mode(opt.mode);

  std::vector<named_input> inputs;
  inputs.push_back(load_input(opt.input));
  econ::sample s = parse_sample(inputs[0].text, nullptr);
  if (opt.form == "linear") s = select_factor(s, opt.x_col);
  const econ::regression_model m = fit_sample(s, opt.form, 1, 2.0);
  const econ::reserve_report report = econ::reserve_estimate(s, m, mode);

  std::ostringstream out;
  out << csv_metadata(fleetcore::rounding_mode::exact, inputs);
  out << "# form: " << opt.form << "\n";
  out << "# mode: " << econ::to_string(report.mode) << "\n";
  out << "# percent_of_mean: "
      << (std::isnan(report.percent_of_mean)
              ? std::string("undefined")
              : csv::format_number(report.percent_of_mean))
      << "\n";
  out << "factor,delta_x,delta_y\n";
  for (const auto& row : report.rows) {
    out << 'x' << (row.factor + 1) << ',' << csv::format_number(row.delta_x)
        << ',' << csv::format_number(row.delta_y) << "\n";
  }
  out << "total,," << csv::format_number(report.total_delta_y) << "\n";

  write_file_atomic(opt.output, out.str());
  return 0;
}

}  // namespace fleetcli
