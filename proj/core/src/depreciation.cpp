// SPDX-License-Identifier: MIT
#include "fleetcore/depreciation.hpp"

#include <algorithm>
#include <cmath>

#include "fleetcore/errors.hpp"

namespace fleetcore::depr {

namespace {

// Builds a schedule from per-period charges. In paper mode the charges are
// expected pre-rounded; factors round to 3 decimals and each present value
// to 2, matching the reference tables.
schedule assemble(const vehicle_scenario& sc, std::vector<schedule_row> rows,
                  rounding_mode mode) {
  schedule sched;
  sched.rows = std::move(rows);
  for (auto& row : sched.rows) {
    row.discount_factor = discount_factor(sc.discount_rate, row.period, mode);
    row.present_value = rounded(row.charge * row.discount_factor, 2, mode);
    sched.nominal_sum += row.charge;
    sched.discounted_sum += row.present_value;
    sched.capped = sched.capped || row.capped;
  }
  return sched;
}

}  // namespace

void validate(const vehicle_scenario& sc) {
  if (!(sc.initial_value > 0))
    throw validation_error("scenario: initial_value must be positive");
  if (!(sc.base_rate > 0))
    throw validation_error("scenario: base_rate must be positive");
  if (sc.acceleration < 1)
    throw validation_error("scenario: acceleration must be >= 1");
  if (sc.annual_mileage.empty())
    throw validation_error("scenario: annual_mileage is empty");
  for (double l : sc.annual_mileage)
    if (l < 0) throw validation_error("scenario: negative mileage");
  if (sc.discount_rate < 0)
    throw validation_error("scenario: discount_rate must be >= 0");
  if (sc.liquidation_value < 0)
    throw validation_error("scenario: liquidation_value must be >= 0");
  if (!sc.side_gains.empty() &&
      sc.side_gains.size() != sc.annual_mileage.size())
    throw validation_error(
        "scenario: side_gains length must match annual_mileage");
  if (!(sc.cost_slope >= 0))
    throw validation_error("scenario: cost_slope must be >= 0");
}

double uniform_charge(double initial_value, double base_rate,
                      double mileage_km) {
  return (initial_value * base_rate / 100.0) * (mileage_km / 1000.0);
}

schedule uniform_schedule(const vehicle_scenario& sc, rounding_mode mode) {
  validate(sc);
  std::vector<schedule_row> rows;
  rows.reserve(sc.annual_mileage.size());
  double residual = sc.initial_value;
  for (std::size_t i = 0; i < sc.annual_mileage.size(); ++i) {
    schedule_row row;
    row.period = static_cast<int>(i) + 1;
    row.mileage = sc.annual_mileage[i];
    double charge =
        rounded(uniform_charge(sc.initial_value, sc.base_rate, row.mileage), 2,
                mode);
    if (charge > residual) {
      charge = residual;
      row.capped = true;
    }
    row.charge = charge;
    residual -= charge;
    row.residual = residual;
    rows.push_back(row);
  }
  return assemble(sc, std::move(rows), mode);
}

schedule degressive_schedule(const vehicle_scenario& sc, rounding_mode mode) {
  validate(sc);
  const double rate = sc.acceleration * sc.base_rate / 100.0;
  std::vector<schedule_row> rows;
  rows.reserve(sc.annual_mileage.size());
  double residual = sc.initial_value;
  for (std::size_t i = 0; i < sc.annual_mileage.size(); ++i) {
    schedule_row row;
    row.period = static_cast<int>(i) + 1;
    row.mileage = sc.annual_mileage[i];
    double charge = rounded(residual * rate * (row.mileage / 1000.0), 2, mode);
    if (charge > residual) {  // keeps the residual from going below zero
      charge = residual;
      row.capped = true;
    }
    row.charge = charge;
    residual -= charge;
    row.residual = residual;
    rows.push_back(row);
  }
  return assemble(sc, std::move(rows), mode);
}

double discount_factor(double rate, int period, rounding_mode mode) {
  if (rate < 0) throw validation_error("discount_factor: negative rate");
  if (period < 1) throw validation_error("discount_factor: period must be >= 1");
  return rounded(1.0 / std::pow(1.0 + rate, period), 3, mode);
}

double present_value(const schedule& sched, double rate, rounding_mode mode) {
  double sum = 0;
  for (const auto& row : sched.rows)
    sum += rounded(row.charge * discount_factor(rate, row.period, mode), 2, mode);
  return sum;
}

double net_discounted_value(const vehicle_scenario& sc, const schedule& sched,
                            bool salvage_as_inflow, rounding_mode mode) {
  if (!sc.side_gains.empty() && sc.side_gains.size() != sched.rows.size())
    throw validation_error(
        "net_discounted_value: side_gains length must match the schedule");
  double inflows = 0;
  for (std::size_t i = 0; i < sched.rows.size(); ++i) {
    const auto& row = sched.rows[i];
    const double gain = sc.side_gains.empty() ? 0.0 : sc.side_gains[i];
    inflows += rounded((row.charge + gain) * row.discount_factor, 2, mode);
  }
  const int horizon = static_cast<int>(sched.rows.size());
  const double salvage_pv =
      sc.liquidation_value == 0
          ? 0.0
          : rounded(sc.liquidation_value *
                        discount_factor(sc.discount_rate, horizon, mode),
                    2, mode);
  // As printed in the source method the liquidation value sits inside the
  // subtracted bracket; the variant flag gives it the conventional salvage
  // treatment on the inflow side.
  return salvage_as_inflow ? inflows + salvage_pv - sc.initial_value
                           : inflows - (sc.initial_value + salvage_pv);
}

double material_cost(double material_base, double cost_slope,
                     double cumulative_km) {
  if (!(material_base > 0))
    throw validation_error("material_cost: material_base must be positive");
  if (cost_slope < 0 || cumulative_km < 0)
    throw validation_error("material_cost: negative input");
  return material_base * std::exp(cost_slope * cumulative_km / 100000.0);
}

std::vector<cost_row> cost_per_km_table(
    const vehicle_scenario& sc, charge_method method,
    const std::optional<std::vector<double>>& material_column,
    rounding_mode mode, mileage_anchor anchor) {
  const schedule sched = method == charge_method::uniform
                             ? uniform_schedule(sc, mode)
                             : degressive_schedule(sc, mode);
  if (material_column && material_column->size() != sched.rows.size())
    throw validation_error(
        "cost_per_km_table: material column length must match the horizon");
  std::vector<cost_row> rows;
  rows.reserve(sched.rows.size());
  double cumulative = 0;
  for (std::size_t i = 0; i < sched.rows.size(); ++i) {
    const auto& srow = sched.rows[i];
    if (!(srow.mileage > 0))
      throw validation_error("cost_per_km_table: period " +
                             std::to_string(srow.period) + " has zero mileage");
    cost_row row;
    row.period = srow.period;
    row.mileage = srow.mileage;
    if (material_column) {
      row.material = (*material_column)[i];
    } else {
      double at = cumulative;
      if (anchor == mileage_anchor::period_mid) at += srow.mileage / 2.0;
      if (anchor == mileage_anchor::period_end) at += srow.mileage;
      row.material =
          rounded(material_cost(sc.material_base, sc.cost_slope, at), 2, mode);
    }
    // charge is in whole currency units, the load in hundredths per km
    row.amortization_load =
        rounded(100.0 * srow.charge / srow.mileage, 2, mode);
    row.total = row.material + row.amortization_load + sc.fixed_cost;
    cumulative += srow.mileage;
    rows.push_back(row);
  }
  return rows;
}

zone profitability_zone(double cumulative_km, double threshold_km) {
  if (!(threshold_km > 0))
    throw validation_error("profitability_zone: threshold must be positive");
  return cumulative_km > threshold_km ? zone::loss_zone : zone::normal;
}

std::vector<double> sum_of_years_charges(double initial_value,
                                         double liquidation_value,
                                         int periods) {
  if (periods < 1)
    throw validation_error("sum_of_years_charges: periods must be >= 1");
  if (liquidation_value < 0 || liquidation_value > initial_value)
    throw validation_error(
        "sum_of_years_charges: liquidation_value out of range");
  const double depreciable = initial_value - liquidation_value;
  const double weight_sum = periods * (periods + 1) / 2.0;
  std::vector<double> charges(periods);
  for (int t = 1; t <= periods; ++t)
    charges[t - 1] = depreciable * (periods - t + 1) / weight_sum;
  return charges;
}

}  // namespace fleetcore::depr
