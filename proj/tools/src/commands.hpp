// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "fleetcore/rounding.hpp"

namespace fleetcli {

// Each command validates, computes every report in memory, and only then
// writes the output files (atomically), so a failure never leaves partial
// reports. Errors surface as fleetcore exceptions; main maps them to exit
// codes (validation 2, I/O 3, numeric 4).

struct ledger_options {
  std::string input;             // balance CSV (required)
  std::string output;            // normalized balance CSV
  std::string groups;            // code,value CSV
  std::string structure_output;  // structure-share CSV
  std::string registry = "official";  // official | refined | file path
};
int run_ledger(const ledger_options& opt);

struct repro_options {
  std::string input;         // balance CSV
  std::string output;        // per-record JSON report
  std::string chain;         // index CSV: period,price_step,asset_step
  std::string chain_output;  // chained-index CSV
  std::string convention = "multiplier";  // or "percent"
};
int run_repro(const repro_options& opt);

struct depr_options {
  std::string scenario;  // JSON document or key,value CSV (required)
  std::string output;    // schedule CSV
  std::string summary;   // totals/NDV JSON
  std::string cost_output;    // per-km cost CSV
  std::string material_file;  // period,material CSV overriding the model
  std::string method = "uniform";       // or "degressive"
  std::string material_anchor = "start";  // start | mid | end
  bool salvage_inflow = false;
  double loss_threshold = 0;  // 0 = default threshold
  fleetcore::rounding_mode round = fleetcore::rounding_mode::exact;
};
int run_depr(const depr_options& opt);

struct prod_options {
  std::string input;          // observation CSV
  std::string output;         // derived ratios CSV
  std::string assess_output;  // year-over-year efficiency CSV
  std::string band_output;    // band-and-aggregate CSV
  std::string band_key;  // tonne_day | mileage | fondovidacha | work_per_tonne
  std::string band_edges;     // comma-separated ascending edges
  std::string work;           // tons,distance_km,t_norm,t_fact CSV
  std::string work_output;    // adjusted transport work CSV
  fleetcore::rounding_mode round = fleetcore::rounding_mode::exact;
};
int run_prod(const prod_options& opt);

struct fit_options {
  std::string input;   // sample CSV: enterprise_id,x1..xk,y[,weight]
  std::string output;  // model JSON
  std::string form = "linear";  // linear | parabola | multilinear
  int x_col = 1;                // factor column for single-factor forms
  double t_value = 2.0;
  std::string f_table;  // critical-F CSV; empty = bundled table
};
int run_fit(const fit_options& opt);

struct reserve_options {
  std::string input;   // sample CSV
  std::string output;  // per-factor reserve CSV
  std::string form = "multilinear";  // linear | multilinear
  std::string mode = "optimal";      // minimal | optimal | maximal
  int x_col = 1;
};
int run_reserve(const reserve_options& opt);

struct forecast_options {
  std::string input;   // series CSV: t,y
  std::string output;  // t,trend,seasonal,forecast CSV
  int degree = 2;
  int horizon = 4;
  std::string wave = "auto";  // auto | +sin | -sin | +cos | -cos
  bool raw_trend = false;     // fit the trend on the raw series
};
int run_forecast(const forecast_options& opt);

struct golden_options {
  std::string output;  // optional JSON dump of every check
};
int run_golden(const golden_options& opt);

}  // namespace fleetcli
