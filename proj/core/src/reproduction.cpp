// SPDX-License-Identifier: MIT
#include "fleetcore/reproduction.hpp"

#include "fleetcore/errors.hpp"

namespace fleetcore::repro {

legacy_result legacy_coefficients(const ledger::balance_record& r) {
  if (r.value_end <= 0 || r.value_begin <= 0)
    throw validation_error(
        "legacy_coefficients: value_begin and value_end must be positive");
  // Renewal counts newly commissioned assets only; transfers of used assets
  // onto the balance are inflow but not renewal.
  return {100.0 * r.inflow_new / r.value_end,
          100.0 * r.outflow_total / r.value_begin};
}

mean_base_result mean_base_coefficients(const ledger::balance_record& r) {
  const double mean = (r.value_begin + r.value_end) / 2.0;
  if (mean <= 0)
    throw validation_error(
        "mean_base_coefficients: mean annual value is zero");
  return {mean, 100.0 * r.inflow_new / mean, 100.0 * r.outflow_total / mean,
          100.0 * r.outflow_liquidated / mean};
}

double reproduction_coefficient(double inflow_new, double outflow_liquidated) {
  if (inflow_new < 0 || outflow_liquidated < 0)
    throw validation_error("reproduction_coefficient: negative input");
  if (outflow_liquidated == 0)
    throw validation_error(
        "reproduction_coefficient: no liquidation, ratio undefined");
  return 100.0 * inflow_new / outflow_liquidated;
}

report build_report(const ledger::balance_record& r) {
  report rep;
  const legacy_result legacy = legacy_coefficients(r);
  const mean_base_result mean = mean_base_coefficients(r);
  rep.renewal_legacy = legacy.renewal;
  rep.retirement_legacy = legacy.retirement;
  rep.mean_annual_value = mean.mean;
  rep.renewal = mean.renewal;
  rep.retirement = mean.retirement;
  rep.liquidation = mean.liquidation;
  if (r.outflow_liquidated > 0) {
    rep.reproduction = reproduction_coefficient(r.inflow_new, r.outflow_liquidated);
    rep.reproduction_defined = true;
  }
  rep.note =
      "renewal, retirement and liquidation share one base, the mean annual "
      "value (value_begin + value_end) / 2; the source worked example prints "
      "a retirement denominator of 17308 against its own mean of 17038, "
      "treated here as a misprint and recomputed from the mean";
  return rep;
}

index_chain chain_indices(const std::vector<std::string>& labels,
                          const std::vector<double>& steps,
                          step_convention convention) {
  if (steps.empty()) throw validation_error("chain_indices: no steps");
  if (!labels.empty() && labels.size() != steps.size())
    throw validation_error("chain_indices: labels and steps length mismatch");
  index_chain chain;
  chain.labels = labels;
  if (chain.labels.empty())
    for (std::size_t i = 0; i < steps.size(); ++i)
      chain.labels.push_back(std::to_string(i + 1));
  chain.step_indices.reserve(steps.size());
  chain.cumulative.reserve(steps.size());
  double running = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const double step = steps[i];
    if (!(step > 0))
      throw validation_error("chain_indices: step " + std::to_string(i + 1) +
                             " is not positive");
    // cumulative is kept in the percent-of-base form the source tables print;
    // the percent branch divides late so integer-valued chains stay exact.
    if (convention == step_convention::percent) {
      chain.step_indices.push_back(step / 100.0);
      running = (i == 0) ? step : running * step / 100.0;
    } else {
      chain.step_indices.push_back(step);
      running = (i == 0) ? 100.0 * step : running * step;
    }
    chain.cumulative.push_back(running);
  }
  return chain;
}

index_chain chain_indices(const std::vector<double>& steps,
                          step_convention convention) {
  return chain_indices({}, steps, convention);
}

double indexation_gap(double price_cumulative, double asset_cumulative) {
  if (!(price_cumulative > 0) || !(asset_cumulative > 0))
    throw validation_error("indexation_gap: inputs must be positive");
  return price_cumulative / asset_cumulative;
}

}  // namespace fleetcore::repro
