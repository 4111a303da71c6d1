// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

namespace fleetcore::fcast {

// Ordered quarterly observations: t starts at 1 and increases without gaps.
struct series_point {
  int t = 0;
  double y = 0;
};
using series = std::vector<series_point>;

void validate(const series& s);

// Centered five-term moving average; the two edge points at each end are
// dropped rather than computed on a shrunken window.
series moving_average_5(const series& s);

// Trend polynomial of degree 1 or 2. Degree 2 is the documented choice for
// crisis regimes, where the factors at work amplify over time.
struct trend_poly {
  int degree = 1;
  double a = 0;
  double b = 0;
  double c = 0;  // zero for degree 1
  double at(double t) const { return a + b * t + c * t * t; }
};

// Least squares over (t, y); by convention fitted on the smoothed series
// (smoothing is step one of the method), callers may pass the raw one.
trend_poly fit_trend(const series& s, int degree);

// Mean absolute detrended residual over the residual's local extrema.
// Extrema use strict neighbor comparisons; a flat run collapses to one
// extremum at its midpoint (rounded down). Fewer than two extrema set the
// warning flag (monotone residuals carry no seasonal signal).
struct amplitude_result {
  double amplitude = 0;
  std::vector<int> extrema_t;
  bool warning_few_extrema = false;
};

amplitude_result seasonal_amplitude(const series& s, const trend_poly& trend);

// The wave's sign and phase are chosen so its extremum lands in the quarter
// where the residual extremum was observed.
enum class wave_form { plus_sin, minus_sin, plus_cos, minus_cos };

const char* to_string(wave_form f);

// Wave value at period t: one quarter maps to pi/2, so period-4 seasonality
// uses frequency 1.
double wave_value(wave_form form, double frequency, double t);

// Picks the form whose extremum quarter matches the strongest residual
// extremum (maximum -> peak quarter, minimum -> trough quarter). Falls back
// to plus_sin when the residual has no extrema.
wave_form select_wave_form(const series& s, const trend_poly& trend);

struct forecast_model {
  trend_poly trend;
  double amplitude = 0;
  wave_form form = wave_form::plus_sin;
  double frequency = 1.0;
};

// trend(t) + amplitude * wave(t)
double model_value(const forecast_model& m, double t);

struct forecast_row {
  int t = 0;
  double trend = 0;
  double seasonal = 0;
  double forecast = 0;
};

// Rows for t = last_t + 1 .. last_t + horizon; horizon >= 1.
std::vector<forecast_row> compose_and_forecast(const forecast_model& m,
                                               int last_t, int horizon);

}  // namespace fleetcore::fcast
