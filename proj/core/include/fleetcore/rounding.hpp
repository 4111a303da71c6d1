// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>

namespace fleetcore {

// paper reproduces the reference tables digit for digit (fixed decimal places,
// round half up); exact keeps full double precision and is the analysis default.
enum class rounding_mode { exact, paper };

// Decimal round-half-up (2.345 -> 2.35 at 2 decimals), the convention the
// reference tables use.
inline double round_half_up(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::floor(value * scale + 0.5) / scale;
}

// Round-half-up to a number of significant digits.
inline double round_significant(double value, int digits) {
  if (value == 0.0) return 0.0;
  const double magnitude = std::ceil(std::log10(std::fabs(value)));
  const double scale = std::pow(10.0, digits - magnitude);
  return std::floor(value * scale + 0.5) / scale;
}

// Applies round_half_up only in paper mode.
inline double rounded(double value, int decimals, rounding_mode mode) {
  return mode == rounding_mode::paper ? round_half_up(value, decimals) : value;
}

}  // namespace fleetcore
