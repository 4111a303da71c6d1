// SPDX-License-Identifier: MIT
#include <cstdio>
#include <exception>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fleetcore/errors.hpp"
#include "fleetcore/version.hpp"

namespace {

const std::map<std::string, fleetcore::rounding_mode> round_map = {
    {"exact", fleetcore::rounding_mode::exact},
    {"paper", fleetcore::rounding_mode::paper}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fleet asset analytics: balances, depreciation, productivity, "
               "regression and forecasting reports"};
  app.set_version_flag("--version", std::string(fleetcore::version));
  app.require_subcommand(1);

  fleetcli::ledger_options ledger;
  auto* cmd_ledger =
      app.add_subcommand("ledger", "Validate balance tables and compute "
                                   "structure shares");
  cmd_ledger->add_option("--input", ledger.input, "Balance CSV");
  cmd_ledger->add_option("--output", ledger.output,
                         "Normalized balance CSV to write");
  cmd_ledger->add_option("--groups", ledger.groups,
                         "Group-value CSV (code,value)");
  cmd_ledger->add_option("--structure-output", ledger.structure_output,
                         "Structure-share CSV to write");
  cmd_ledger->add_option("--registry", ledger.registry,
                         "official, refined, or a registry CSV path");

  fleetcli::repro_options repro;
  auto* cmd_repro = app.add_subcommand(
      "repro", "Renewal, retirement and reproduction coefficients; "
               "indexation chains");
  cmd_repro->add_option("--input", repro.input, "Balance CSV");
  cmd_repro->add_option("--output", repro.output,
                        "Per-record JSON report to write");
  cmd_repro->add_option("--chain", repro.chain,
                        "Index-step CSV (period,price_step,asset_step)");
  cmd_repro->add_option("--chain-output", repro.chain_output,
                        "Chained-index CSV to write");
  cmd_repro->add_option("--convention", repro.convention,
                        "Step convention: multiplier or percent");

  fleetcli::depr_options depr;
  auto* cmd_depr = app.add_subcommand(
      "depr", "Mileage depreciation schedules, discounting and per-km costs");
  cmd_depr->add_option("--scenario", depr.scenario,
                       "Scenario JSON or key,value CSV")
      ->required();
  cmd_depr->add_option("--output", depr.output, "Schedule CSV to write");
  cmd_depr->add_option("--summary", depr.summary, "Summary JSON to write");
  cmd_depr->add_option("--cost-output", depr.cost_output,
                       "Per-km cost CSV to write");
  cmd_depr->add_option("--material-file", depr.material_file,
                       "period,material CSV overriding the wear model");
  cmd_depr->add_option("--method", depr.method, "uniform or degressive");
  cmd_depr->add_option("--material-anchor", depr.material_anchor,
                       "Wear-model evaluation point: start, mid or end");
  cmd_depr->add_flag("--salvage-inflow", depr.salvage_inflow,
                     "Count the liquidation value as an inflow in the NDV");
  cmd_depr->add_option("--loss-threshold", depr.loss_threshold,
                       "Profitability threshold in km (0 = default)");
  cmd_depr->add_option("--round", depr.round, "paper or exact")
      ->transform(CLI::CheckedTransformer(round_map, CLI::ignore_case));

  fleetcli::prod_options prod;
  auto* cmd_prod = app.add_subcommand(
      "prod", "Fleet productivity ratios, efficiency assessment and band "
              "aggregation");
  cmd_prod->add_option("--input", prod.input, "Observation CSV");
  cmd_prod->add_option("--output", prod.output,
                       "Derived-ratio CSV to write");
  cmd_prod->add_option("--assess-output", prod.assess_output,
                       "Year-over-year efficiency CSV to write");
  cmd_prod->add_option("--band-output", prod.band_output,
                       "Band-aggregate CSV to write");
  cmd_prod->add_option("--band-key", prod.band_key,
                       "tonne_day, mileage, fondovidacha or work_per_tonne");
  cmd_prod->add_option("--band-edges", prod.band_edges,
                       "Comma-separated ascending band edges");
  cmd_prod->add_option("--work", prod.work,
                       "Delivery CSV (tons,distance_km,t_norm,t_fact)");
  cmd_prod->add_option("--work-output", prod.work_output,
                       "Adjusted transport work CSV to write");
  cmd_prod->add_option("--round", prod.round, "paper or exact")
      ->transform(CLI::CheckedTransformer(round_map, CLI::ignore_case));

  fleetcli::fit_options fit;
  auto* cmd_fit = app.add_subcommand(
      "fit", "Least-squares regression with diagnostics and F significance");
  cmd_fit->add_option("--input", fit.input,
                      "Sample CSV (enterprise_id,x1..xk,y[,weight])")
      ->required();
  cmd_fit->add_option("--output", fit.output, "Model JSON to write")
      ->required();
  cmd_fit->add_option("--form", fit.form,
                      "linear, parabola or multilinear");
  cmd_fit->add_option("--x-col", fit.x_col,
                      "Factor column for single-factor forms (1-based)")
      ->check(CLI::PositiveNumber);
  cmd_fit->add_option("--t-value", fit.t_value,
                      "Confidence multiplier for the slope interval");
  cmd_fit->add_option("--f-table", fit.f_table,
                      "Critical-F CSV (default: bundled 0.05 table)");

  fleetcli::reserve_options reserve;
  auto* cmd_reserve = app.add_subcommand(
      "reserve", "Productivity reserves from fitted slopes and factor lifts");
  cmd_reserve->add_option("--input", reserve.input, "Sample CSV")->required();
  cmd_reserve->add_option("--output", reserve.output,
                          "Per-factor reserve CSV to write")
      ->required();
  cmd_reserve->add_option("--form", reserve.form, "linear or multilinear");
  cmd_reserve->add_option("--mode", reserve.mode,
                          "minimal, optimal or maximal");
  cmd_reserve->add_option("--x-col", reserve.x_col,
                          "Factor column for the linear form (1-based)")
      ->check(CLI::PositiveNumber);

  fleetcli::forecast_options forecast;
  auto* cmd_forecast = app.add_subcommand(
      "forecast", "Trend plus seasonal-wave decomposition and forecasts");
  cmd_forecast->add_option("--input", forecast.input, "Series CSV (t,y)")
      ->required();
  cmd_forecast->add_option("--output", forecast.output,
                           "Decomposition CSV to write")
      ->required();
  cmd_forecast->add_option("--degree", forecast.degree,
                           "Trend degree: 1 or 2");
  cmd_forecast->add_option("--horizon", forecast.horizon,
                           "Quarters to forecast past the series end");
  cmd_forecast->add_option("--wave", forecast.wave,
                           "auto, +sin, -sin, +cos or -cos");
  cmd_forecast->add_flag("--raw-trend", forecast.raw_trend,
                         "Fit the trend on the raw series, not the smoothed "
                         "one");

  fleetcli::golden_options golden;
  auto* cmd_golden = app.add_subcommand(
      "golden", "Self-test against the embedded reference tables");
  cmd_golden->add_option("--output", golden.output,
                         "JSON dump of every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  try {
    if (cmd_ledger->parsed()) return fleetcli::run_ledger(ledger);
    if (cmd_repro->parsed()) return fleetcli::run_repro(repro);
    if (cmd_depr->parsed()) return fleetcli::run_depr(depr);
    if (cmd_prod->parsed()) return fleetcli::run_prod(prod);
    if (cmd_fit->parsed()) return fleetcli::run_fit(fit);
    if (cmd_reserve->parsed()) return fleetcli::run_reserve(reserve);
    if (cmd_forecast->parsed()) return fleetcli::run_forecast(forecast);
    if (cmd_golden->parsed()) return fleetcli::run_golden(golden);
  } catch (const fleetcore::validation_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const fleetcore::io_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const fleetcore::numeric_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}
