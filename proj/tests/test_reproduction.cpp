// SPDX-License-Identifier: MIT
#include <vector>

#include <doctest.h>

#include "fleetcore/errors.hpp"
#include "fleetcore/reproduction.hpp"

using namespace fleetcore;

namespace {

ledger::balance_record lviv_1996() {
  ledger::balance_record rec;
  rec.enterprise_id = "lviv";
  rec.period = 1996;
  rec.value_begin = 16919;
  rec.inflow_total = 509;
  rec.inflow_new = 274;
  rec.outflow_total = 271;
  rec.outflow_liquidated = 87;
  rec.value_end = 17157;
  return rec;
}

}  // namespace

TEST_SUITE_BEGIN("reproduction");

TEST_CASE("legacy coefficients reproduce the reference row") {
  const auto legacy = repro::legacy_coefficients(lviv_1996());
  CHECK(legacy.renewal == doctest::Approx(1.597).epsilon(0.001));
  CHECK(legacy.retirement == doctest::Approx(1.602).epsilon(0.001));
}

TEST_CASE("mean-base coefficients share one denominator") {
  const auto rec = lviv_1996();
  const auto mean = repro::mean_base_coefficients(rec);
  CHECK(mean.mean == doctest::Approx(17038.0));
  CHECK(mean.renewal == doctest::Approx(1.60817).epsilon(1e-5));
  CHECK(mean.retirement == doctest::Approx(1.590562).epsilon(1e-5));
  CHECK(mean.liquidation == doctest::Approx(0.510623).epsilon(1e-5));
  // one base, so the renewal/retirement ratio is the numerators' ratio
  CHECK(mean.renewal / mean.retirement ==
        doctest::Approx(rec.inflow_new / rec.outflow_total).epsilon(1e-12));
}

TEST_CASE("mean base brackets the legacy coefficients") {
  // value grew over the year, so the mean base is smaller than the end base
  // (renewal rises) and larger than the begin base (retirement falls).
  const auto rec = lviv_1996();
  const auto legacy = repro::legacy_coefficients(rec);
  const auto mean = repro::mean_base_coefficients(rec);
  REQUIRE(rec.value_end > mean.mean);
  CHECK(mean.renewal > legacy.renewal);
  CHECK(mean.retirement < legacy.retirement);

  auto shrinking = rec;
  shrinking.value_begin = 17157;
  shrinking.value_end = 16919;
  shrinking.inflow_total = 100;
  shrinking.inflow_new = 50;
  shrinking.outflow_total = 338;
  shrinking.outflow_liquidated = 200;
  const auto legacy2 = repro::legacy_coefficients(shrinking);
  const auto mean2 = repro::mean_base_coefficients(shrinking);
  CHECK(mean2.renewal < legacy2.renewal);
  CHECK(mean2.retirement > legacy2.retirement);
}

TEST_CASE("reproduction coefficient flags capital erosion") {
  CHECK(repro::reproduction_coefficient(653, 8392) ==
        doctest::Approx(7.78).epsilon(0.002));
  CHECK(repro::reproduction_coefficient(22, 920) ==
        doctest::Approx(2.39).epsilon(0.002));
  CHECK(repro::reproduction_coefficient(920, 920) == doctest::Approx(100.0));
  CHECK_THROWS_AS(repro::reproduction_coefficient(1, 0), validation_error);
}

TEST_CASE("report aggregates every coefficient") {
  const auto rep = repro::build_report(lviv_1996());
  CHECK(rep.renewal_legacy == doctest::Approx(1.597).epsilon(0.001));
  CHECK(rep.retirement_legacy == doctest::Approx(1.602).epsilon(0.001));
  CHECK(rep.mean_annual_value == doctest::Approx(17038.0));
  CHECK(rep.renewal == doctest::Approx(1.60817).epsilon(1e-5));
  CHECK(rep.retirement == doctest::Approx(1.590562).epsilon(1e-5));
  CHECK(rep.liquidation == doctest::Approx(0.510623).epsilon(1e-5));
  CHECK(rep.reproduction_defined);
  CHECK(rep.reproduction == doctest::Approx(100.0 * 274 / 87).epsilon(1e-12));
  CHECK_FALSE(rep.note.empty());

  auto none = lviv_1996();
  none.outflow_liquidated = 0;
  const auto rep2 = repro::build_report(none);
  CHECK_FALSE(rep2.reproduction_defined);
}

TEST_CASE("index chains agree across step conventions") {
  const std::vector<double> percent = {1800, 2080, 100, 5200, 870};
  const std::vector<double> multiplier = {18.0, 20.8, 1.0, 52.0, 8.7};
  const auto a = repro::chain_indices(percent, repro::step_convention::percent);
  const auto b =
      repro::chain_indices(multiplier, repro::step_convention::multiplier);
  REQUIRE(a.cumulative.size() == 5);
  const std::vector<double> expected = {1800, 37440, 37440, 1946880, 16937856};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(a.cumulative[i] == expected[i]);  // integer-exact chain
    CHECK(b.cumulative[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("chaining is associative over concatenation") {
  const std::vector<double> head = {1800, 2080};
  const std::vector<double> all = {1800, 2080, 100, 5200, 870};
  const auto partial =
      repro::chain_indices(head, repro::step_convention::percent);
  const auto full = repro::chain_indices(all, repro::step_convention::percent);
  // continuing the chain from the partial cumulative matches the full chain
  double running = partial.cumulative.back();
  for (std::size_t i = head.size(); i < all.size(); ++i) {
    running = running * all[i] / 100.0;
    CHECK(running == doctest::Approx(full.cumulative[i]).epsilon(1e-12));
  }
}

TEST_CASE("unit steps carry the cumulative value forward") {
  const auto chain = repro::chain_indices({18.0, 1.0, 1.0},
                                          repro::step_convention::multiplier);
  CHECK(chain.cumulative[0] == doctest::Approx(1800.0));
  CHECK(chain.cumulative[1] == doctest::Approx(1800.0));
  CHECK(chain.cumulative[2] == doctest::Approx(1800.0));
}

TEST_CASE("chain rejects non-positive steps") {
  CHECK_THROWS_AS(repro::chain_indices({18.0, 0.0},
                                       repro::step_convention::multiplier),
                  validation_error);
  CHECK_THROWS_AS(repro::chain_indices({-5.0},
                                       repro::step_convention::percent),
                  validation_error);
}

TEST_CASE("indexation gap compares price and book growth") {
  CHECK(repro::indexation_gap(2390.1, 1570.0) ==
        doctest::Approx(1.52).epsilon(0.005));
  CHECK(repro::indexation_gap(6023544.7, 42076.0) ==
        doctest::Approx(143.2).epsilon(0.001));
  CHECK(repro::indexation_gap(100.0, 100.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(repro::indexation_gap(100.0, 0.0), validation_error);
}

TEST_SUITE_END();
