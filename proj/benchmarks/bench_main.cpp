// SPDX-License-Identifier: MIT
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "fleetcore/depreciation.hpp"
#include "fleetcore/econometrics.hpp"
#include "fleetcore/forecasting.hpp"
#include "fleetcore/reproduction.hpp"

namespace {

using namespace fleetcore;

depr::vehicle_scenario make_scenario(std::size_t periods) {
  depr::vehicle_scenario sc;
  sc.initial_value = 25000;
  sc.base_rate = 0.24;
  sc.acceleration = 2.0;
  sc.discount_rate = 0.15;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> km(30000, 80000);
  for (std::size_t i = 0; i < periods; ++i)
    sc.annual_mileage.push_back(km(rng));
  return sc;
}

econ::sample make_sample(std::size_t n, std::size_t factors) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> x_dist(0.2, 2.2);
  std::normal_distribution<double> noise(0.0, 0.1);
  econ::sample s;
  s.x.resize(factors);
  for (std::size_t i = 0; i < n; ++i) {
    double y = 1.0;
    for (std::size_t j = 0; j < factors; ++j) {
      const double x = x_dist(rng);
      s.x[j].push_back(x);
      y += (j % 2 == 0 ? 0.5 : -0.3) * x;
    }
    s.y.push_back(y + noise(rng));
  }
  return s;
}

void bm_degressive_schedule(benchmark::State& state) {
  const auto sc = make_scenario(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        depr::degressive_schedule(sc, rounding_mode::paper));
}
BENCHMARK(bm_degressive_schedule)->Arg(6)->Arg(600);

void bm_fit_multilinear(benchmark::State& state) {
  const auto s = make_sample(97, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(econ::fit_multilinear(s));
}
BENCHMARK(bm_fit_multilinear);

void bm_fit_parabola(benchmark::State& state) {
  auto s = make_sample(97, 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    s.y[i] += 0.4 * s.x[0][i] * s.x[0][i];
  for (auto _ : state)
    benchmark::DoNotOptimize(econ::fit_parabola(s));
}
BENCHMARK(bm_fit_parabola);

void bm_chain_indices(benchmark::State& state) {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> step(50, 500);
  std::vector<double> steps;
  for (int i = 0; i < 120; ++i) steps.push_back(step(rng));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        repro::chain_indices(steps, repro::step_convention::percent));
}
BENCHMARK(bm_chain_indices);

void bm_compose_and_forecast(benchmark::State& state) {
  fcast::forecast_model m;
  m.trend = {1, 2.0, 0.5, 0.0};
  m.amplitude = 3.0;
  m.form = fcast::wave_form::plus_sin;
  for (auto _ : state)
    benchmark::DoNotOptimize(fcast::compose_and_forecast(m, 16, 8));
}
BENCHMARK(bm_compose_and_forecast);

}  // namespace

BENCHMARK_MAIN();
