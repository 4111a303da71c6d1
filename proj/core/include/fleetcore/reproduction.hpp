// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "fleetcore/asset_ledger.hpp"

namespace fleetcore::repro {

// Renewal and retirement as conventionally computed, against two different
// bases (inflow over end-of-year value, outflow over begin-of-year value).
// The mismatched bases are why the mean-base variants below exist.
struct legacy_result {
  double renewal = 0;     // percent, 100 * inflow_new / value_end
  double retirement = 0;  // percent, 100 * outflow_total / value_begin
};

legacy_result legacy_coefficients(const ledger::balance_record& record);

// Renewal, retirement and liquidation against one common base, the mean
// annual value (value_begin + value_end) / 2.
struct mean_base_result {
  double mean = 0;  // mean annual value
  double renewal = 0;
  double retirement = 0;
  double liquidation = 0;  // percent, 100 * outflow_liquidated / mean
};

mean_base_result mean_base_coefficients(const ledger::balance_record& record);

// 100 * inflow_new / outflow_liquidated. Values below 100 signal net capital
// erosion: less new value commissioned than worn-out value scrapped.
// outflow_liquidated == 0 -> validation_error ("no liquidation").
double reproduction_coefficient(double inflow_new, double outflow_liquidated);

struct report {
  double renewal_legacy = 0;
  double retirement_legacy = 0;
  double mean_annual_value = 0;
  double renewal = 0;
  double retirement = 0;
  double liquidation = 0;
  double reproduction = 0;
  bool reproduction_defined = false;  // false when nothing was liquidated
  std::string note;                   // provenance of the mean-base method
};

report build_report(const ledger::balance_record& record);

// Index steps are accepted either as growth multipliers (18.0) or in the
// percent form the source tables print (1800).
enum class step_convention { multiplier, percent };

struct index_chain {
  std::vector<std::string> labels;
  std::vector<double> step_indices;  // growth multipliers as applied
  std::vector<double> cumulative;    // running product, percent of base 100
};

// Running product of indexation steps. A step of 1 (or 100 in percent form)
// means no indexation that period: the cumulative value carries forward.
index_chain chain_indices(const std::vector<std::string>& labels,
                          const std::vector<double>& steps,
                          step_convention convention = step_convention::multiplier);
index_chain chain_indices(const std::vector<double>& steps,
                          step_convention convention = step_convention::multiplier);

// How far cumulative price growth has outrun cumulative book-value
// indexation; 1.0 means book values kept pace.
double indexation_gap(double price_cumulative, double asset_cumulative);

}  // namespace fleetcore::repro
