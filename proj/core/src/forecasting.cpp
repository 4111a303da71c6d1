// SPDX-License-Identifier: MIT
#include "fleetcore/forecasting.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fleetcore/econometrics.hpp"
#include "fleetcore/errors.hpp"

namespace fleetcore::fcast {

namespace {

// Residual runs: consecutive points sharing one residual value. Plateaus
// collapse to a single candidate extremum at the run midpoint.
struct run {
  std::size_t first = 0;
  std::size_t last = 0;
  double value = 0;
};

std::vector<run> compress(const std::vector<double>& r) {
  std::vector<run> runs;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!runs.empty() && r[i] == runs.back().value) {
      runs.back().last = i;
    } else {
      runs.push_back({i, i, r[i]});
    }
  }
  return runs;
}

struct extremum {
  int t = 0;
  double residual = 0;
  bool is_max = false;
};

std::vector<extremum> find_extrema(const series& s,
                                   const std::vector<double>& r) {
  std::vector<extremum> out;
  const std::vector<run> runs = compress(r);
  for (std::size_t k = 1; k + 1 < runs.size(); ++k) {
    const double prev = runs[k - 1].value;
    const double next = runs[k + 1].value;
    const double v = runs[k].value;
    const bool is_max = v > prev && v > next;
    const bool is_min = v < prev && v < next;
    if (!is_max && !is_min) continue;
    const std::size_t mid = (runs[k].first + runs[k].last) / 2;
    out.push_back({s[mid].t, v, is_max});
  }
  return out;
}

std::vector<double> residuals(const series& s, const trend_poly& trend) {
  std::vector<double> r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = s[i].y - trend.at(s[i].t);
  return r;
}

}  // namespace

void validate(const series& s) {
  if (s.empty()) throw validation_error("series: empty");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int expected = static_cast<int>(i) + 1;
    if (s[i].t != expected)
      throw validation_error("series: expected t = " +
                             std::to_string(expected) + ", got " +
                             std::to_string(s[i].t));
    if (!std::isfinite(s[i].y))
      throw validation_error("series: non-finite value at t = " +
                             std::to_string(s[i].t));
  }
}

series moving_average_5(const series& s) {
  validate(s);
  if (s.size() < 5)
    throw validation_error("moving_average_5: needs at least 5 points");
  series out;
  for (std::size_t i = 2; i + 2 < s.size(); ++i) {
    double sum = 0;
    for (std::size_t j = i - 2; j <= i + 2; ++j) sum += s[j].y;
    out.push_back({s[i].t, sum / 5.0});
  }
  return out;
}

trend_poly fit_trend(const series& s, int degree) {
  if (degree != 1 && degree != 2)
    throw validation_error("fit_trend: degree must be 1 or 2");
  if (s.empty()) throw validation_error("fit_trend: empty series");
  econ::sample sm;
  sm.x.resize(1);
  for (const auto& p : s) {
    sm.x[0].push_back(static_cast<double>(p.t));
    sm.y.push_back(p.y);
  }
  trend_poly trend;
  trend.degree = degree;
  if (degree == 1) {
    const econ::regression_model m = econ::fit_linear(sm);
    trend.a = m.coef[0];
    trend.b = m.coef[1];
  } else {
    const econ::regression_model m = econ::fit_parabola(sm);
    trend.a = m.coef[0];
    trend.b = m.coef[1];
    trend.c = m.coef[2];
  }
  return trend;
}

amplitude_result seasonal_amplitude(const series& s, const trend_poly& trend) {
  validate(s);
  const std::vector<double> r = residuals(s, trend);
  const std::vector<extremum> ex = find_extrema(s, r);
  amplitude_result result;
  for (const auto& e : ex) result.extrema_t.push_back(e.t);
  result.warning_few_extrema = ex.size() < 2;
  if (ex.empty()) return result;
  double sum = 0;
  for (const auto& e : ex) sum += std::fabs(e.residual);
  result.amplitude = sum / static_cast<double>(ex.size());
  return result;
}

const char* to_string(wave_form f) {
  switch (f) {
    case wave_form::plus_sin: return "+sin";
    case wave_form::minus_sin: return "-sin";
    case wave_form::plus_cos: return "+cos";
    default: return "-cos";
  }
}

double wave_value(wave_form form, double frequency, double t) {
  const double theta = frequency * t * std::numbers::pi / 2.0;
  switch (form) {
    case wave_form::plus_sin: return std::sin(theta);
    case wave_form::minus_sin: return -std::sin(theta);
    case wave_form::plus_cos: return std::cos(theta);
    default: return -std::cos(theta);
  }
}

wave_form select_wave_form(const series& s, const trend_poly& trend) {
  validate(s);
  const std::vector<double> r = residuals(s, trend);
  const std::vector<extremum> ex = find_extrema(s, r);
  if (ex.empty()) return wave_form::plus_sin;
  const extremum* strongest = &ex.front();
  for (const auto& e : ex)
    if (std::fabs(e.residual) > std::fabs(strongest->residual)) strongest = &e;
  const int quarter = (strongest->t - 1) % 4 + 1;
  if (strongest->is_max) {
    switch (quarter) {
      case 1: return wave_form::plus_sin;
      case 2: return wave_form::minus_cos;
      case 3: return wave_form::minus_sin;
      default: return wave_form::plus_cos;
    }
  }
  switch (quarter) {
    case 1: return wave_form::minus_sin;
    case 2: return wave_form::plus_cos;
    case 3: return wave_form::plus_sin;
    default: return wave_form::minus_cos;
  }
}

double model_value(const forecast_model& m, double t) {
  return m.trend.at(t) + m.amplitude * wave_value(m.form, m.frequency, t);
}

std::vector<forecast_row> compose_and_forecast(const forecast_model& m,
                                               int last_t, int horizon) {
  if (horizon < 1)
    throw validation_error("compose_and_forecast: horizon must be >= 1");
  if (last_t < 0)
    throw validation_error("compose_and_forecast: negative base period");
  std::vector<forecast_row> rows;
  for (int t = last_t + 1; t <= last_t + horizon; ++t) {
    forecast_row row;
    row.t = t;
    row.trend = m.trend.at(t);
    row.seasonal = m.amplitude * wave_value(m.form, m.frequency, t);
    row.forecast = row.trend + row.seasonal;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fleetcore::fcast
