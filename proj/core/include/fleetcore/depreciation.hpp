// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <vector>

#include "fleetcore/rounding.hpp"

namespace fleetcore::depr {

// One vehicle's lifetime parameters. Values (initial_value,
// liquidation_value, charges, side_gains) are in whole currency units;
// the per-kilometre cost fields (material_base, fixed_cost) are in
// hundredths of the currency unit per km, the unit the cost tables print.
struct vehicle_scenario {
  double initial_value = 0;         // acquisition value
  double base_rate = 0;             // depreciation percent per 1000 km
  double acceleration = 1.0;        // rate multiplier of the degressive method
  std::vector<double> annual_mileage;  // km per period; defines the horizon
  double discount_rate = 0;         // per period
  double liquidation_value = 0;     // residual sale value at the horizon
  std::vector<double> side_gains;   // extra per-period inflows; empty = zeros
  double material_base = 0;         // per-km material cost of a new vehicle
  double cost_slope = 0;            // exponential wear slope per 100000 km
  double fixed_cost = 0;            // per-km cost independent of wear
};

// Throws validation_error when invariants do not hold (positive value and
// rate, acceleration >= 1, non-negative mileages and discount rate,
// side_gains length matching the horizon when present).
void validate(const vehicle_scenario& scenario);

struct schedule_row {
  int period = 0;
  double mileage = 0;
  double charge = 0;           // depreciation charged this period
  double residual = 0;         // book value after the charge
  double discount_factor = 0;  // 1 / (1 + r)^t
  double present_value = 0;    // charge * discount_factor
  bool capped = false;         // charge was cut to keep the residual at zero
};

struct schedule {
  std::vector<schedule_row> rows;
  double nominal_sum = 0;     // sum of charges
  double discounted_sum = 0;  // sum of present values
  bool capped = false;        // any row hit the residual floor
};

// Charge of the uniform mileage method:
//   A = (initial_value * base_rate / 100) * (mileage_km / 1000)
// i.e. base_rate percent of the initial value per 1000 km driven.
double uniform_charge(double initial_value, double base_rate, double mileage_km);

// Per-period schedule of the uniform method. In paper mode, charges and
// present values round half-up to 2 decimals and discount factors to 3,
// reproducing the reference tables digit for digit.
schedule uniform_schedule(const vehicle_scenario& scenario,
                          rounding_mode mode = rounding_mode::exact);

// Degressive (accelerated) mileage method: the multiplied rate applies to the
// declining residual,
//   A_t = residual_{t-1} * (acceleration * base_rate / 100) * (mileage_km / 1000)
// with residual_0 = initial_value. Charges are capped so the residual never
// goes below zero; a cap is reported in the schedule, not an error.
schedule degressive_schedule(const vehicle_scenario& scenario,
                             rounding_mode mode = rounding_mode::exact);

// 1 / (1 + rate)^period; paper mode rounds to 3 decimals.
double discount_factor(double rate, int period,
                       rounding_mode mode = rounding_mode::exact);

// Sum of charge_t * discount_factor(rate, t). Paper mode applies the
// 3-decimal factor to the (already rounded) charge and rounds each product
// to 2 decimals before summing.
double present_value(const schedule& sched, double rate,
                     rounding_mode mode = rounding_mode::exact);

// Net discounted value of owning the vehicle over the schedule horizon:
//   sum_t (A_t + E_t) / (1+r)^t  -  (initial_value + L_T / (1+r)^T)
// Zero is the efficiency criterion: a negative value is the discounted loss
// against the acquisition outlay. The default keeps the liquidation value
// inside the subtracted bracket, as the source method prints it;
// salvage_as_inflow = true moves it to the inflow side (the conventional
// treatment).
double net_discounted_value(const vehicle_scenario& scenario,
                            const schedule& sched,
                            bool salvage_as_inflow = false,
                            rounding_mode mode = rounding_mode::exact);

// Exponential wear model of per-km material cost:
//   B(L) = material_base * exp(cost_slope * cumulative_km / 100000)
double material_cost(double material_base, double cost_slope,
                     double cumulative_km);

enum class charge_method { uniform, degressive };

// Where along a period's mileage the material-cost model is evaluated when
// no explicit material column is supplied.
enum class mileage_anchor { period_start, period_mid, period_end };

struct cost_row {
  int period = 0;
  double mileage = 0;
  double material = 0;           // per km
  double amortization_load = 0;  // charge spread over the period's km
  double total = 0;              // material + amortization + fixed_cost
};

// Per-km cost decomposition by period. Charges come from the chosen method's
// schedule; the amortization load converts them to the per-km cost unit
// (hundredths of the currency unit). material_column, when supplied, is used
// verbatim (the supported path for reproducing the reference table, whose
// material figures are empirical); otherwise the exponential model is
// evaluated at the configured anchor.
std::vector<cost_row> cost_per_km_table(
    const vehicle_scenario& scenario, charge_method method,
    const std::optional<std::vector<double>>& material_column = std::nullopt,
    rounding_mode mode = rounding_mode::exact,
    mileage_anchor anchor = mileage_anchor::period_start);

inline constexpr double default_loss_threshold_km = 300000.0;

enum class zone { normal, loss_zone };

// Vehicles past the mileage threshold cost more to run than they return;
// strictly beyond the threshold counts as the loss zone.
zone profitability_zone(double cumulative_km,
                        double threshold_km = default_loss_threshold_km);

// Auxiliary annual (not mileage-based) accelerated method: period t of T
// carries (T - t + 1) / (1 + 2 + ... + T) of the depreciable value.
std::vector<double> sum_of_years_charges(double initial_value,
                                         double liquidation_value,
                                         int periods);

}  // namespace fleetcore::depr
