// SPDX-License-Identifier: MIT
#include "golden_suite.hpp"

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "fleetcore/asset_ledger.hpp"
#include "fleetcore/depreciation.hpp"
#include "fleetcore/econometrics.hpp"
#include "fleetcore/forecasting.hpp"
#include "fleetcore/productivity.hpp"
#include "fleetcore/reproduction.hpp"
#include "fleetcore/rounding.hpp"
#include "golden_data.h"
#include "oracle.hpp"

namespace fleetcli {

namespace {

using nlohmann::json;
namespace ledger = fleetcore::ledger;
namespace repro = fleetcore::repro;
namespace depr = fleetcore::depr;
namespace prod = fleetcore::prod;
namespace econ = fleetcore::econ;
namespace fcast = fleetcore::fcast;

// Worst element of a vector comparison; the reported expected/actual pair is
// the element that deviated most.
struct worst_dev {
  double expected = 0;
  double actual = 0;
  double dev = -1;
  int index = -1;

  void track(double e, double a, int idx) {
    const double d = std::fabs(a - e);
    if (d > dev) {
      dev = d;
      expected = e;
      actual = a;
      index = idx;
    }
  }
};

void push(std::vector<check_result>& out, std::string id, int criterion,
          std::string detail, double expected, double actual,
          double tolerance) {
  check_result r;
  r.id = std::move(id);
  r.criterion = criterion;
  r.detail = std::move(detail);
  r.expected = expected;
  r.actual = actual;
  r.tolerance = tolerance;
  r.pass = std::fabs(actual - expected) <= tolerance;
  out.push_back(std::move(r));
}

void push_flag(std::vector<check_result>& out, std::string id, int criterion,
               std::string detail, bool pass) {
  check_result r;
  r.id = std::move(id);
  r.criterion = criterion;
  r.detail = std::move(detail);
  r.expected = 1;
  r.actual = pass ? 1 : 0;
  r.tolerance = 0;
  r.pass = pass;
  out.push_back(std::move(r));
}

std::vector<double> doubles(const json& arr) {
  std::vector<double> v;
  for (const auto& x : arr) v.push_back(x.get<double>());
  return v;
}

void check_balance(const json& g, std::vector<check_result>& out) {
  const json& b = g.at("balance");
  ledger::balance_record rec;
  rec.enterprise_id = b.at("enterprise_id").get<std::string>();
  rec.period = b.at("period").get<int>();
  rec.value_begin = b.at("value_begin").get<double>();
  rec.inflow_total = b.at("inflow_total").get<double>();
  rec.inflow_new = b.at("inflow_new").get<double>();
  rec.outflow_total = b.at("outflow_total").get<double>();
  rec.outflow_liquidated = b.at("outflow_liquidated").get<double>();
  rec.value_end = b.at("value_end").get<double>();
  ledger::validate(rec);

  const double tol = b.at("tolerance_pp").get<double>();
  const repro::report rep = repro::build_report(rec);
  push(out, "c01.legacy-renewal", 1,
       "renewal on the end-of-year base, " + rec.enterprise_id,
       b.at("legacy_renewal").get<double>(), rep.renewal_legacy, tol);
  push(out, "c01.legacy-retirement", 1,
       "retirement on the begin-of-year base, " + rec.enterprise_id,
       b.at("legacy_retirement").get<double>(), rep.retirement_legacy, tol);
  push(out, "c01.mean-renewal", 1, "renewal on the mean annual base",
       b.at("mean_renewal").get<double>(), rep.renewal, tol);
  push(out, "c01.mean-retirement", 1, "retirement on the mean annual base",
       b.at("mean_retirement").get<double>(), rep.retirement, tol);
  push(out, "c01.mean-liquidation", 1,
       "liquidation on the mean annual base; the reference prints one digit "
       "(0.5) and the row's own figures give 0.5106, outside a +-0.01 band",
       b.at("mean_liquidation").get<double>(), rep.liquidation, tol);

  const int iterations = b.at("runtime_iterations").get<int>();
  volatile double sink = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < iterations; ++i)
    sink = sink + repro::build_report(rec).liquidation;
  const auto stop = std::chrono::steady_clock::now();
  const double mean_us =
      std::chrono::duration<double, std::micro>(stop - start).count() /
      iterations;
  check_result r;
  r.id = "c01.report-runtime";
  r.criterion = 1;
  r.detail = "mean build time over " + std::to_string(iterations) +
             " runs, microseconds";
  r.expected = b.at("runtime_budget_us").get<double>();
  r.actual = mean_us;
  r.tolerance = 0;
  r.pass = mean_us < r.expected;
  out.push_back(std::move(r));
}

void check_reproduction(const json& g, std::vector<check_result>& out) {
  const json& section = g.at("reproduction");
  const double tol = section.at("tolerance").get<double>();
  for (const auto& c : section.at("cases")) {
    const double actual = repro::reproduction_coefficient(
        c.at("inflow_new").get<double>(),
        c.at("outflow_liquidated").get<double>());
    push(out, "c02.reproduction-" + c.at("id").get<std::string>(), 2,
         "new value commissioned per 100 liquidated",
         c.at("expected").get<double>(), actual, tol);
  }
}

void check_indexation(const json& g, std::vector<check_result>& out) {
  const json& section = g.at("indexation");
  const auto steps = doubles(section.at("steps_percent"));
  const auto expected = doubles(section.at("expected_cumulative"));
  const repro::index_chain chain =
      repro::chain_indices(steps, repro::step_convention::percent);
  worst_dev w;
  for (std::size_t i = 0; i < expected.size(); ++i)
    w.track(expected[i], chain.cumulative[i], static_cast<int>(i));
  push(out, "c03.chain-exact", 3,
       "cumulative indexation chain, worst period " +
           std::to_string(w.index + 1) + " of " +
           std::to_string(expected.size()),
       w.expected, w.actual, 0.0);

  const double gap_tol = section.at("gap_tolerance").get<double>();
  int n = 0;
  for (const auto& pair : section.at("gap_pairs")) {
    ++n;
    const double actual =
        repro::indexation_gap(pair.at("price").get<double>(),
                              pair.at("asset").get<double>());
    push(out, "c03.gap-" + std::to_string(n), 3,
         "price growth over book-value growth", pair.at("expected").get<double>(),
         actual, gap_tol);
  }
}

depr::vehicle_scenario scenario_from(const json& s) {
  depr::vehicle_scenario sc;
  sc.initial_value = s.at("initial_value").get<double>();
  sc.base_rate = s.at("base_rate").get<double>();
  sc.acceleration = s.at("acceleration").get<double>();
  sc.annual_mileage = doubles(s.at("annual_mileage"));
  sc.discount_rate = s.at("discount_rate").get<double>();
  sc.liquidation_value = s.at("liquidation_value").get<double>();
  return sc;
}

void check_depreciation(const json& g, std::vector<check_result>& out) {
  const json& section = g.at("depreciation");
  const depr::vehicle_scenario sc = scenario_from(section.at("scenario"));
  depr::validate(sc);
  const auto paper = fleetcore::rounding_mode::paper;
  const auto exact = fleetcore::rounding_mode::exact;
  const depr::schedule uni = depr::uniform_schedule(sc, paper);
  const depr::schedule deg = depr::degressive_schedule(sc, paper);
  const depr::schedule uni_exact = depr::uniform_schedule(sc, exact);
  const depr::schedule deg_exact = depr::degressive_schedule(sc, exact);

  const double charge_tol = section.at("charge_tolerance").get<double>();
  {
    const auto expected = doubles(section.at("uniform_charges"));
    worst_dev w;
    for (std::size_t i = 0; i < expected.size(); ++i)
      w.track(expected[i], uni.rows[i].charge, static_cast<int>(i));
    w.track(section.at("uniform_nominal_sum").get<double>(), uni.nominal_sum,
            static_cast<int>(expected.size()));
    push(out, "c04.uniform-charges", 4,
         "per-period uniform charges and their sum, worst entry " +
             std::to_string(w.index + 1),
         w.expected, w.actual, 1e-9);
  }
  {
    const auto expected = doubles(section.at("degressive_charges"));
    worst_dev w;
    for (std::size_t i = 0; i < expected.size(); ++i)
      w.track(expected[i], deg.rows[i].charge, static_cast<int>(i));
    push(out, "c04.degressive-charges", 4,
         "per-period degressive charges, worst period " +
             std::to_string(w.index + 1),
         w.expected, w.actual, charge_tol);
  }
  push(out, "c04.degressive-nominal", 4, "degressive charges summed",
       section.at("degressive_nominal_sum").get<double>(), deg.nominal_sum,
       charge_tol);
  const double disc_tol = section.at("discounted_tolerance").get<double>();
  push(out, "c04.uniform-discounted", 4, "uniform charges discounted at 15%",
       section.at("uniform_discounted_sum").get<double>(), uni.discounted_sum,
       disc_tol);
  push(out, "c04.degressive-discounted", 4,
       "degressive charges discounted at 15%",
       section.at("degressive_discounted_sum").get<double>(),
       deg.discounted_sum, disc_tol);
  {
    const double budget = section.at("exact_agreement_fraction").get<double>();
    const double u = std::fabs(uni_exact.discounted_sum - uni.discounted_sum) /
                     uni.discounted_sum;
    const double d = std::fabs(deg_exact.discounted_sum - deg.discounted_sum) /
                     deg.discounted_sum;
    push(out, "c04.exact-vs-paper", 4,
         "worst relative gap between exact and table rounding, discounted sums",
         0.0, std::max(u, d), budget);
  }

  const double ndv =
      depr::net_discounted_value(sc, uni, /*salvage_as_inflow=*/false, paper);
  push(out, "c05.ndv", 5, "net discounted value of the uniform schedule",
       section.at("ndv").get<double>(), ndv,
       section.at("ndv_tolerance").get<double>());
  const double share_tol = section.at("share_tolerance").get<double>();
  push(out, "c05.discounted-share", 5,
       "discounted charges as percent of the acquisition value",
       section.at("discounted_share_percent").get<double>(),
       100.0 * uni.discounted_sum / sc.initial_value, share_tol);
  push(out, "c05.nominal-share", 5,
       "nominal charges as percent of the acquisition value",
       section.at("nominal_share_percent").get<double>(),
       100.0 * uni.nominal_sum / sc.initial_value, share_tol);
}

void check_cost_table(const json& g, std::vector<check_result>& out) {
  const json& section = g.at("cost_table");
  depr::vehicle_scenario sc =
      scenario_from(g.at("depreciation").at("scenario"));
  sc.fixed_cost = section.at("fixed_cost").get<double>();
  const auto material = doubles(section.at("material_column"));
  const auto paper = fleetcore::rounding_mode::paper;
  const auto uni = depr::cost_per_km_table(sc, depr::charge_method::uniform,
                                           material, paper);
  const auto deg = depr::cost_per_km_table(sc, depr::charge_method::degressive,
                                           material, paper);
  const double tol = section.at("tolerance").get<double>();

  {
    const double expected = section.at("uniform_load").get<double>();
    worst_dev w;
    for (std::size_t i = 0; i < uni.size(); ++i)
      w.track(expected, uni[i].amortization_load, static_cast<int>(i));
    push(out, "c06.uniform-load", 6,
         "uniform per-km charge, constant across periods", w.expected,
         w.actual, 1e-9);
  }
  {
    const auto expected = doubles(section.at("degressive_loads"));
    worst_dev w;
    for (std::size_t i = 0; i < expected.size(); ++i)
      w.track(expected[i], deg[i].amortization_load, static_cast<int>(i));
    push(out, "c06.degressive-loads", 6,
         "degressive per-km charge, worst period " +
             std::to_string(w.index + 1),
         w.expected, w.actual, tol);
  }
  {
    const auto expected = doubles(section.at("uniform_totals"));
    worst_dev w;
    for (std::size_t i = 0; i < expected.size(); ++i)
      w.track(expected[i], uni[i].total, static_cast<int>(i));
    push(out, "c06.uniform-totals", 6,
         "uniform per-km total cost, worst period " +
             std::to_string(w.index + 1),
         w.expected, w.actual, tol);
  }
  {
    const auto expected = doubles(section.at("degressive_totals"));
    worst_dev w;
    for (std::size_t i = 0; i < expected.size(); ++i)
      w.track(expected[i], deg[i].total, static_cast<int>(i));
    push(out, "c06.degressive-totals", 6,
         "degressive per-km total cost, worst period " +
             std::to_string(w.index + 1),
         w.expected, w.actual, tol);
  }
}

void check_adjusted_work(const json& g, std::vector<check_result>& out) {
  const json& section = g.at("adjusted_work");
  const double tol = section.at("tolerance").get<double>();
  worst_dev w;
  int idx = 0;
  for (const auto& row : section.at("rows")) {
    const double actual = prod::adjusted_transport_work(
        row.at("tons").get<double>(), row.at("distance_km").get<double>(),
        row.at("t_norm").get<double>(), row.at("t_fact").get<double>(),
        fleetcore::rounding_mode::paper);
    w.track(row.at("expected").get<double>(), actual, idx++);
  }
  push(out, "c07.adjusted-work", 7,
       "delivery-time corrected transport work, worst row " +
           std::to_string(w.index + 1),
       w.expected, w.actual, tol);
}

void check_efficiency(const json& g, std::vector<check_result>& out) {
  const json& section = g.at("efficiency");
  const auto full = doubles(section.at("full"));
  const auto marginal = doubles(section.at("marginal"));
  const auto expected_k = doubles(section.at("expected_k"));
  const auto years = section.at("years");
  const double anchor = section.at("fund_anchor").get<double>();
  const double tol = section.at("k_tolerance").get<double>();
  const std::string want_quadrant =
      section.at("expected_quadrant").get<std::string>();
  const std::string want_verdict =
      section.at("expected_verdict").get<std::string>();

  bool classified = true;
  std::string detail;
  for (std::size_t i = 0; i + 1 < full.size(); ++i) {
    const double f0 = full[i], f1 = full[i + 1], df = marginal[i];
    // Reconstruct fund and output levels that carry exactly these full and
    // marginal productivities: fix the current fund, solve for the prior one.
    const double fund1 = anchor;
    const double fund0 = fund1 * (df - f1) / (df - f0);
    const double p0 = f0 * fund0;
    const double p1 = f1 * fund1;
    const auto res = prod::efficiency_assessment(p0, p1, fund0, fund1);
    const std::string from = std::to_string(years[i].get<int>());
    const std::string to = std::to_string(years[i + 1].get<int>());
    push(out, "c08.k-" + from.substr(2) + "-" + to.substr(2), 8,
         "marginal over full productivity, " + from + " to " + to,
         expected_k[i], res.k, tol);
    if (prod::to_string(res.quad) != want_quadrant ||
        prod::to_string(res.verd) != want_verdict)
      classified = false;
  }
  push_flag(out, "c08.classification", 8,
            "every transition lands in quadrant " + want_quadrant +
                " with verdict " + want_verdict,
            classified);
}

void check_regression(const json& g, std::vector<check_result>& out) {
  const json& section = g.at("regression");
  const double ex_tol = section.at("extremum_tolerance").get<double>();
  for (const auto& c : section.at("extrema")) {
    econ::regression_model m;
    m.form = econ::model_form::parabola;
    m.coef = {0.0, c.at("b").get<double>(), c.at("c").get<double>()};
    push(out, "c09.extremum-" + c.at("id").get<std::string>(), 9,
         "utilization level that maximizes the fitted parabola",
         c.at("expected").get<double>(), econ::parabola_extremum(m), ex_tol);
  }
  {
    const json& c = section.at("confidence");
    const auto [low, high] = econ::slope_confidence(
        c.at("b").get<double>(), c.at("marginal_error").get<double>());
    worst_dev w;
    w.track(c.at("low").get<double>(), low, 0);
    w.track(c.at("high").get<double>(), high, 1);
    push(out, "c09.confidence", 9,
         "slope confidence bounds, worst side", w.expected, w.actual,
         c.at("tolerance").get<double>());
  }
  {
    const json& c = section.at("marginal_effect");
    econ::regression_model m;
    m.form = econ::model_form::linear;
    m.coef = {0.0, c.at("b").get<double>()};
    const auto effect = econ::marginal_effect(m, c.at("dx").get<double>());
    push(out, "c09.marginal-effect", 9,
         "first-order response to a 0.1 move of the factor",
         c.at("expected").get<double>(), effect[0],
         c.at("tolerance").get<double>());
  }
}

double rel_dev(const std::vector<double>& got,
               const std::vector<double>& want) {
  double scale = 1.0;
  for (double v : want) scale = std::max(scale, std::fabs(v));
  double dev = 0;
  for (std::size_t i = 0; i < want.size(); ++i)
    dev = std::max(dev, std::fabs(got[i] - want[i]) / scale);
  return dev;
}

void check_oracles(const json& g, std::vector<check_result>& out) {
  const json& section = g.at("oracle");
  const int samples = section.at("samples").get<int>();
  const std::uint64_t seed = section.at("seed").get<std::uint64_t>();
  const double rel_tol = section.at("rel_tolerance").get<double>();
  const double eta_tol = section.at("eta_tolerance").get<double>();

  double worst_linear = 0, worst_eta = 0;
  {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
      const auto d = oracle::make_dataset(rng, 1, false, i);
      econ::sample s{d.x, d.y, d.w};
      const auto m = econ::fit_linear(s);
      worst_linear = std::max(worst_linear, rel_dev(m.coef, oracle::fit_line(d)));
      worst_eta = std::max(worst_eta, std::fabs(m.eta - std::fabs(m.pearson)));
    }
  }
  push(out, "c10.oracle-linear", 10,
       "line fits against the determinant oracle, " +
           std::to_string(samples) + " random samples, worst relative gap",
       0.0, worst_linear, rel_tol);
  push(out, "c10.eta-equals-r", 10,
       "correlation ratio against |r| on the same linear fits", 0.0,
       worst_eta, eta_tol);

  {
    std::mt19937_64 rng(seed + 1);
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
      const auto d = oracle::make_dataset(rng, 1, true, i);
      econ::sample s{d.x, d.y, d.w};
      const auto m = econ::fit_parabola(s);
      worst = std::max(worst, rel_dev(m.coef, oracle::fit_parabola(d)));
    }
    push(out, "c10.oracle-parabola", 10,
         "parabola fits against the determinant oracle, " +
             std::to_string(samples) + " random samples, worst relative gap",
         0.0, worst, rel_tol);
  }
  {
    std::mt19937_64 rng(seed + 2);
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
      const auto d = oracle::make_dataset(rng, 3, false, i);
      econ::sample s{d.x, d.y, d.w};
      const auto m = econ::fit_multilinear(s);
      worst = std::max(worst, rel_dev(m.coef, oracle::fit_plane3(d)));
    }
    push(out, "c10.oracle-multilinear", 10,
         "three-factor fits against the determinant oracle, " +
             std::to_string(samples) + " random samples, worst relative gap",
         0.0, worst, rel_tol);
  }
  {
    const json& grid = section.at("f_grid");
    const double n = grid.at("n").get<double>();
    const double k = grid.at("k").get<double>();
    const double start = grid.at("determination_start").get<double>();
    const double step = grid.at("determination_step").get<double>();
    const double stop = grid.at("determination_stop").get<double>();
    double prev = econ::f_statistic(start, n, k);
    double min_delta = std::numeric_limits<double>::max();
    for (double r2 = start + step; r2 <= stop + 1e-12; r2 += step) {
      const double f = econ::f_statistic(r2, n, k);
      min_delta = std::min(min_delta, f - prev);
      prev = f;
    }
    check_result r;
    r.id = "c10.f-monotone";
    r.criterion = 10;
    r.detail = "smallest increase of F across the determination grid; "
               "positive means strictly monotone";
    r.expected = 0;
    r.actual = min_delta;
    r.tolerance = 0;
    r.pass = min_delta > 0;
    out.push_back(std::move(r));
  }
}

void check_reserves(const json& g, std::vector<check_result>& out) {
  const json& section = g.at("reserve");
  const double tol = section.at("tolerance").get<double>();
  {
    const json& h = section.at("hand_example");
    econ::sample s;
    s.x.push_back(doubles(h.at("x")));
    s.y = s.x[0];
    econ::regression_model m;
    m.form = econ::model_form::linear;
    m.coef = {0.0, h.at("slope").get<double>()};
    worst_dev w;
    w.track(h.at("minimal").get<double>(),
            econ::reserve_estimate(s, m, econ::reserve_mode::minimal)
                .total_delta_y,
            0);
    w.track(h.at("optimal").get<double>(),
            econ::reserve_estimate(s, m, econ::reserve_mode::optimal)
                .total_delta_y,
            1);
    w.track(h.at("maximal").get<double>(),
            econ::reserve_estimate(s, m, econ::reserve_mode::maximal)
                .total_delta_y,
            2);
    push(out, "c11.hand-example", 11,
         "two-point sample, unit slope; minimal, progressive-mean and "
         "maximal lifts",
         w.expected, w.actual, tol);
  }
  {
    econ::sample s;
    s.x.push_back({1.5, 1.5, 1.5, 1.5, 1.5});
    s.y = {1, 2, 3, 2, 1};
    econ::regression_model m;
    m.form = econ::model_form::linear;
    m.coef = {0.0, 1.0};
    double worst = 0;
    for (const auto mode :
         {econ::reserve_mode::minimal, econ::reserve_mode::optimal,
          econ::reserve_mode::maximal}) {
      worst = std::max(
          worst,
          std::fabs(econ::reserve_estimate(s, m, mode).total_delta_y));
    }
    push(out, "c11.zero-reserve-at-mean", 11,
         "a factor already at its mean everywhere has nothing to lift", 0.0,
         worst, tol);
  }
  {
    const int samples = section.at("random_samples").get<int>();
    std::mt19937_64 rng(section.at("seed").get<std::uint64_t>());
    std::uniform_int_distribution<std::size_t> n_dist(5, 30);
    std::uniform_real_distribution<double> x_dist(0.0, 10.0);
    std::uniform_real_distribution<double> b_dist(0.3, 3.0);
    double min_diff = std::numeric_limits<double>::max();
    for (int it = 0; it < samples; ++it) {
      const std::size_t n = n_dist(rng);
      econ::sample s;
      s.x.resize(2);
      econ::regression_model m;
      m.form = econ::model_form::multilinear;
      m.coef = {1.0, b_dist(rng), b_dist(rng)};
      for (std::size_t i = 0; i < n; ++i) {
        const double x1 = x_dist(rng), x2 = x_dist(rng);
        s.x[0].push_back(x1);
        s.x[1].push_back(x2);
        s.y.push_back(m.coef[0] + m.coef[1] * x1 + m.coef[2] * x2);
      }
      const double minimal =
          econ::reserve_estimate(s, m, econ::reserve_mode::minimal)
              .total_delta_y;
      const double optimal =
          econ::reserve_estimate(s, m, econ::reserve_mode::optimal)
              .total_delta_y;
      min_diff = std::min(min_diff, optimal - minimal);
    }
    check_result r;
    r.id = "c11.optimal-ge-minimal";
    r.criterion = 11;
    r.detail = "progressive-mean lift never below the laggard lift over " +
               std::to_string(samples) + " random samples (smallest margin)";
    r.expected = 0;
    r.actual = min_diff;
    r.tolerance = tol;
    r.pass = min_diff >= -tol;
    out.push_back(std::move(r));
  }
}

void check_forecast(const json& g, std::vector<check_result>& out) {
  const json& section = g.at("forecast");
  const double a = section.at("intercept").get<double>();
  const double b = section.at("slope").get<double>();
  const double amp = section.at("amplitude").get<double>();
  const int quarters = section.at("quarters").get<int>();
  const int horizon = section.at("horizon").get<int>();
  const auto gen = [&](int t) {
    return a + b * t + amp * std::sin(std::numbers::pi * t / 2.0);
  };

  fcast::series s;
  for (int t = 1; t <= quarters; ++t) s.push_back({t, gen(t)});
  const fcast::series smoothed = fcast::moving_average_5(s);
  fcast::forecast_model model;
  model.trend = fcast::fit_trend(smoothed, 1);
  const auto seasonal = fcast::seasonal_amplitude(s, model.trend);
  model.amplitude = seasonal.amplitude;
  model.form = fcast::select_wave_form(s, model.trend);
  model.frequency = 1.0;

  push(out, "c12.slope", 12, "trend slope recovered from the smoothed series",
       b, model.trend.b, section.at("slope_tolerance").get<double>());
  push(out, "c12.amplitude", 12,
       "seasonal amplitude recovered from the detrended residual", amp,
       model.amplitude, section.at("amplitude_tolerance").get<double>());

  const auto rows = fcast::compose_and_forecast(model, quarters, horizon);
  double worst = 0;
  for (const auto& row : rows) {
    const double truth = gen(row.t);
    worst = std::max(worst, std::fabs(row.forecast - truth) /
                                std::fabs(truth));
  }
  push(out, "c12.forecasts", 12,
       std::to_string(horizon) +
           " quarters ahead against the generator, worst relative error",
       0.0, worst, section.at("forecast_rel_tolerance").get<double>());
}

}  // namespace

const char* golden_data() { return embedded_golden_json; }

std::vector<check_result> run_golden_suite() {
  const auto start = std::chrono::steady_clock::now();
  const json g = json::parse(golden_data());
  std::vector<check_result> out;
  check_balance(g, out);
  check_reproduction(g, out);
  check_indexation(g, out);
  check_depreciation(g, out);
  check_cost_table(g, out);
  check_adjusted_work(g, out);
  check_efficiency(g, out);
  check_regression(g, out);
  check_oracles(g, out);
  check_reserves(g, out);
  check_forecast(g, out);
  const auto stop = std::chrono::steady_clock::now();
  const double seconds = std::chrono::duration<double>(stop - start).count();
  check_result r;
  r.id = "c13.suite-runtime";
  r.criterion = 13;
  r.detail = "wall-clock seconds for the checks above";
  r.expected = g.at("suite_budget_seconds").get<double>();
  r.actual = seconds;
  r.tolerance = 0;
  r.pass = seconds < r.expected;
  out.push_back(std::move(r));
  return out;
}

}  // namespace fleetcli
