// SPDX-License-Identifier: MIT
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fleetcore/csv.hpp"
#include "fleetcore/errors.hpp"
#include "fleetcore/forecasting.hpp"
#include "io_util.hpp"

namespace fleetcli {

namespace {

namespace fcast = fleetcore::fcast;
namespace csv = fleetcore::csv;

fcast::series parse_series(const std::string& text) {
  std::istringstream stream(text);
  const csv::table t = csv::read(stream);
  if (t.header != std::vector<std::string>{"t", "y"})
    throw fleetcore::validation_error("series header must be: t,y");
  fcast::series s;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    const std::size_t line = t.line_numbers[i];
    if (row.size() != 2)
      throw fleetcore::validation_error("line " + std::to_string(line) +
                                        ": expected 2 fields");
    fcast::series_point p;
    p.t = static_cast<int>(csv::to_integer(row[0], line));
    p.y = csv::to_number(row[1], line);
    s.push_back(p);
  }
  fcast::validate(s);
  return s;
}

fcast::wave_form parse_wave(const std::string& name) {
  if (name == "+sin") return fcast::wave_form::plus_sin;
  if (name == "-sin") return fcast::wave_form::minus_sin;
  if (name == "+cos") return fcast::wave_form::plus_cos;
  if (name == "-cos") return fcast::wave_form::minus_cos;
  throw fleetcore::validation_error(
      "forecast: --wave must be auto, +sin, -sin, +cos or -cos");
}

}  // namespace

int run_forecast(const forecast_options& opt) {
  if (opt.input.empty())
    throw fleetcore::validation_error("forecast: --input is required");
  if (opt.output.empty())
    throw fleetcore::validation_error("forecast: --output is required");
  if (opt.degree != 1 && opt.degree != 2)
    throw fleetcore::validation_error("forecast: --degree must be 1 or 2");
  if (opt.horizon < 1)
    throw fleetcore::validation_error("forecast: --horizon must be >= 1");

  std::vector<named_input> inputs;
  inputs.push_back(load_input(opt.input));
  const fcast::series raw = parse_series(inputs[0].text);

  fcast::forecast_model model;
  if (opt.raw_trend) {
    model.trend = fcast::fit_trend(raw, opt.degree);
  } else {
    const fcast::series smoothed = fcast::moving_average_5(raw);
    model.trend = fcast::fit_trend(smoothed, opt.degree);
  }
  const fcast::amplitude_result seasonal =
      fcast::seasonal_amplitude(raw, model.trend);
  model.amplitude = seasonal.amplitude;
  model.form = opt.wave == "auto" ? fcast::select_wave_form(raw, model.trend)
                                  : parse_wave(opt.wave);
  model.frequency = 1.0;

  std::ostringstream out;
  out << csv_metadata(fleetcore::rounding_mode::exact, inputs);
  out << "# trend_degree: " << model.trend.degree << "\n";
  out << "# trend_a: " << csv::format_number(model.trend.a) << "\n";
  out << "# trend_b: " << csv::format_number(model.trend.b) << "\n";
  if (model.trend.degree == 2)
    out << "# trend_c: " << csv::format_number(model.trend.c) << "\n";
  out << "# trend_series: " << (opt.raw_trend ? "raw" : "smoothed") << "\n";
  out << "# amplitude: " << csv::format_number(model.amplitude) << "\n";
  out << "# wave: " << fcast::to_string(model.form) << "\n";
  if (seasonal.warning_few_extrema)
    out << "# warning: fewer than two residual extrema; amplitude is weakly "
           "determined\n";

  out << "t,trend,seasonal,forecast\n";
  const int last_t = raw.back().t;
  for (const auto& p : raw) {
    const double trend = model.trend.at(p.t);
    const double seasonal_v =
        model.amplitude * fcast::wave_value(model.form, model.frequency, p.t);
    out << p.t << ',' << csv::format_number(trend) << ','
        << csv::format_number(seasonal_v) << ','
        << csv::format_number(trend + seasonal_v) << "\n";
  }
  for (const auto& row : fcast::compose_and_forecast(model, last_t, opt.horizon)) {
    out << row.t << ',' << csv::format_number(row.trend) << ','
        << csv::format_number(row.seasonal) << ','
        << csv::format_number(row.forecast) << "\n";
  }

  write_file_atomic(opt.output, out.str());
  return 0;
}

}  // namespace fleetcli
