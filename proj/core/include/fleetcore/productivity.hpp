// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fleetcore/rounding.hpp"

namespace fleetcore::prod {

// One enterprise's annual operating aggregates.
struct fleet_observation {
  std::string enterprise_id;
  int year = 0;
  double transport_work = 0;       // tonne-km
  double tons_carried = 0;
  double revenue = 0;
  double profit = 0;
  double fund_value = 0;           // mean annual, comparable prices
  double transport_means_value = 0;
  double tonne_days_in_work = 0;
  double tonne_days_total = 0;
  double loaded_km = 0;
  double total_km = 0;
  double listed_tonnage = 0;       // tonnes of carrying capacity
};

void validate(const fleet_observation& obs, std::size_t line = 0);

// Transport work corrected for delivery-time performance:
//   P = tons * distance * (t_norm / t_fact)
// Paper mode rounds the time ratio to 4 significant digits first, which is
// how the reference table prints it (1.071, 1.0, 0.9375).
double adjusted_transport_work(double tons, double distance_km, double t_norm,
                               double t_fact,
                               rounding_mode mode = rounding_mode::exact);

// Capital productivity: output per unit of fixed-asset value.
double fondovidacha(double transport_work, double fund_value);

// Ratio of increments between two periods: (P1 - P0) / (F1 - F0).
double marginal_fondovidacha(double p0, double p1, double f0, double f1);

enum class quadrant { q1, q2, q3, q4, boundary };
enum class verdict { improved, worsened, unchanged };

const char* to_string(quadrant q);
const char* to_string(verdict v);

struct efficiency_result {
  double full = 0;        // f1 = P1 / F1, current period
  double marginal = 0;    // (P1-P0)/(F1-F0); meaningful when k_finite
  double k = 0;           // marginal / full
  bool k_finite = true;   // false when F did not change but P did
  double index_form = 0;  // (P1/P0 - 1) / (F1/F0 - 1), diagnostic only
  bool index_form_finite = true;
  quadrant quad = quadrant::boundary;
  verdict verd = verdict::unchanged;
};

// Classifies a period-over-period change in (P, F). K compares the marginal
// productivity of the asset change against the achieved full productivity
// (K = marginal / full at the current period). Quadrants follow the signs of
// the increments: q1 both grew (improved iff K > 1), q2 output grew on a
// smaller fund (improved), q3 both fell (improved iff K < 1, the fund shed
// faster than output), q4 output fell on a larger fund (worsened). Zero
// increments land on a boundary and are judged by the moving side alone.
// The index form (growth-rate ratio) is reported as a diagnostic; it drops a
// factor of (F1/F0)/(P1/P0) against K and disagrees with it off the diagonal.
efficiency_result efficiency_assessment(double p0, double p1, double f0,
                                        double f1);

// Share of listed capacity actually in work, in vehicle-tonne-days.
double tonne_day_utilization(double tonne_days_in_work,
                             double tonne_days_total);

// Share of kilometres run loaded.
double mileage_utilization(double loaded_km, double total_km);

// Per-currency and per-tonne performance ratios. A non-positive denominator
// marks only the affected fields as absent; the record still computes.
struct derived_ratios_result {
  std::optional<double> tkm_per_currency;
  std::optional<double> tons_per_currency;
  std::optional<double> revenue_per_currency;
  std::optional<double> profit_per_currency;  // rentability of the funds
  std::optional<double> tons_per_listed_tonne;
  std::optional<double> tkm_per_listed_tonne;
  std::optional<double> tonne_day_utilization;
  std::optional<double> mileage_utilization;
};

derived_ratios_result derived_ratios(const fleet_observation& obs);

struct band_row {
  std::string label;
  double lower = 0;  // -inf encoded as lowest double
  double upper = 0;  // +inf encoded as highest double
  std::size_t count = 0;
  derived_ratios_result ratios;  // ratio of sums over the band's members
};

// Groups observations into bands of a caller-chosen key and aggregates each
// band by ratio-of-sums (numerators and denominators summed before dividing),
// which reproduces grouped reference rows from raw aggregates. Edges must be
// ascending; they produce bands (-inf, e1), [e1, e2), ..., [ek, +inf).
std::vector<band_row> band_and_aggregate(
    const std::vector<fleet_observation>& observations,
    const std::function<double(const fleet_observation&)>& key,
    const std::vector<double>& edges);

}  // namespace fleetcore::prod
