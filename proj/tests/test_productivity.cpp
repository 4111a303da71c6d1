// SPDX-License-Identifier: MIT
#include <cmath>
#include <vector>

#include <doctest.h>

#include "fleetcore/errors.hpp"
#include "fleetcore/productivity.hpp"

using namespace fleetcore;

TEST_SUITE_BEGIN("productivity");

TEST_CASE("adjusted transport work reproduces the reference rows") {
  CHECK(prod::adjusted_transport_work(10, 50, 15, 14, rounding_mode::paper) ==
        doctest::Approx(535.5).epsilon(1e-4));
  CHECK(prod::adjusted_transport_work(10, 50, 15, 15, rounding_mode::paper) ==
        doctest::Approx(500.0).epsilon(1e-12));
  CHECK(prod::adjusted_transport_work(10, 50, 15, 16, rounding_mode::paper) ==
        doctest::Approx(468.75).epsilon(1e-12));
}

TEST_CASE("adjusted work is monotone in actual time and linear in load") {
  const double fast =
      prod::adjusted_transport_work(10, 50, 15, 12, rounding_mode::exact);
  const double slow =
      prod::adjusted_transport_work(10, 50, 15, 18, rounding_mode::exact);
  CHECK(fast > slow);
  const double base =
      prod::adjusted_transport_work(10, 50, 15, 14, rounding_mode::exact);
  CHECK(prod::adjusted_transport_work(20, 50, 15, 14, rounding_mode::exact) ==
        doctest::Approx(2 * base).epsilon(1e-12));
  CHECK(prod::adjusted_transport_work(10, 100, 15, 14, rounding_mode::exact) ==
        doctest::Approx(2 * base).epsilon(1e-12));
}

TEST_CASE("fondovidacha and its marginal form") {
  CHECK(prod::fondovidacha(4113, 1000) == doctest::Approx(4.113));
  CHECK(prod::fondovidacha(0, 1000) == doctest::Approx(0.0));
  CHECK_THROWS_AS(prod::fondovidacha(1, 0), validation_error);
  CHECK(prod::marginal_fondovidacha(100, 150, 10, 20) ==
        doctest::Approx(5.0));
  CHECK_THROWS_AS(prod::marginal_fondovidacha(100, 150, 10, 10),
                  numeric_error);
  // a ray through the origin has marginal equal to full productivity
  CHECK(prod::marginal_fondovidacha(100, 200, 25, 50) ==
        doctest::Approx(prod::fondovidacha(200, 50)).epsilon(1e-12));
}

TEST_CASE("K equals marginal over full productivity to 1e-9") {
  const std::vector<double> full = {4.113, 3.238, 2.216, 1.510, 0.632};
  const std::vector<double> marginal = {18.159, 10.118, 9.571, 6.275};
  const std::vector<double> expected_k = {5.608, 4.566, 6.339, 9.929};
  for (std::size_t i = 0; i + 1 < full.size(); ++i) {
    const double f0 = full[i], f1 = full[i + 1], df = marginal[i];
    const double fund1 = 1000.0;
    const double fund0 = fund1 * (df - f1) / (df - f0);
    const double p0 = f0 * fund0, p1 = f1 * fund1;
    const auto res = prod::efficiency_assessment(p0, p1, fund0, fund1);
    CHECK(res.k ==
          doctest::Approx(prod::marginal_fondovidacha(p0, p1, fund0, fund1) /
                          prod::fondovidacha(p1, fund1))
              .epsilon(1e-9));
    CHECK(res.k == doctest::Approx(expected_k[i]).epsilon(0.0005));
    CHECK(res.quad == prod::quadrant::q3);
    CHECK(res.verd == prod::verdict::worsened);
  }
}

TEST_CASE("quadrants cover every sign combination") {
  // q1: both grew, K > 1 improves
  auto r = prod::efficiency_assessment(100, 160, 100, 110);
  CHECK(r.quad == prod::quadrant::q1);
  CHECK(r.verd == prod::verdict::improved);
  // q1 with K < 1 worsens (output grew slower than the fund)
  r = prod::efficiency_assessment(100, 104, 100, 140);
  CHECK(r.quad == prod::quadrant::q1);
  CHECK(r.verd == prod::verdict::worsened);
  // q2: more output on a smaller fund always improves
  r = prod::efficiency_assessment(100, 120, 100, 90);
  CHECK(r.quad == prod::quadrant::q2);
  CHECK(r.verd == prod::verdict::improved);
  // q3: both fell; shedding fund faster than output improves
  r = prod::efficiency_assessment(100, 95, 100, 60);
  CHECK(r.quad == prod::quadrant::q3);
  CHECK(r.verd == prod::verdict::improved);
  r = prod::efficiency_assessment(100, 50, 100, 95);
  CHECK(r.quad == prod::quadrant::q3);
  CHECK(r.verd == prod::verdict::worsened);
  // q4: less output on a larger fund always worsens
  r = prod::efficiency_assessment(100, 90, 100, 110);
  CHECK(r.quad == prod::quadrant::q4);
  CHECK(r.verd == prod::verdict::worsened);
}

TEST_CASE("boundary cases keep a verdict and flag the infinite K") {
  auto r = prod::efficiency_assessment(100, 100, 100, 100);
  CHECK(r.quad == prod::quadrant::boundary);
  CHECK(r.verd == prod::verdict::unchanged);
  r = prod::efficiency_assessment(100, 120, 100, 100);  // P rose, fund flat
  CHECK(r.quad == prod::quadrant::boundary);
  CHECK_FALSE(r.k_finite);
  CHECK(r.verd == prod::verdict::improved);
  r = prod::efficiency_assessment(100, 100, 100, 80);  // fund fell, P flat
  CHECK(r.verd == prod::verdict::improved);
  r = prod::efficiency_assessment(100, 80, 100, 100);
  CHECK(r.verd == prod::verdict::worsened);
}

TEST_CASE("proportional growth is unchanged with K = 1") {
  const auto r = prod::efficiency_assessment(100, 150, 200, 300);
  CHECK(r.k == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.verd == prod::verdict::unchanged);
}

TEST_CASE("utilization coefficients live in the unit interval") {
  CHECK(prod::tonne_day_utilization(30, 100) == doctest::Approx(0.30));
  CHECK(prod::tonne_day_utilization(100, 100) == doctest::Approx(1.0));
  CHECK(prod::tonne_day_utilization(0, 100) == doctest::Approx(0.0));
  CHECK_THROWS_AS(prod::tonne_day_utilization(1, 0), validation_error);
  CHECK_THROWS_AS(prod::tonne_day_utilization(101, 100), validation_error);
  CHECK(prod::mileage_utilization(36, 100) == doctest::Approx(0.36));
  CHECK_THROWS_AS(prod::mileage_utilization(101, 100), validation_error);
  // common rescaling cancels
  CHECK(prod::mileage_utilization(36 * 7, 100 * 7) ==
        doctest::Approx(0.36).epsilon(1e-12));
}

namespace {

prod::fleet_observation make_obs(const char* id, int year) {
  prod::fleet_observation o;
  o.enterprise_id = id;
  o.year = year;
  o.transport_work = 5807;
  o.tons_carried = 900;
  o.revenue = 1100;
  o.profit = 210;
  o.fund_value = 5357;
  o.transport_means_value = 4100;
  o.tonne_days_in_work = 41;
  o.tonne_days_total = 100;
  o.loaded_km = 44;
  o.total_km = 100;
  o.listed_tonnage = 1000;
  return o;
}

}  // namespace

TEST_CASE("derived ratios compute per-currency and per-tonne figures") {
  const auto o = make_obs("atp", 1995);
  const auto r = prod::derived_ratios(o);
  REQUIRE(r.tkm_per_currency.has_value());
  CHECK(*r.tkm_per_currency == doctest::Approx(5807.0 / 5357).epsilon(1e-12));
  CHECK(*r.tkm_per_listed_tonne == doctest::Approx(5.807).epsilon(1e-12));
  CHECK(*r.profit_per_currency == doctest::Approx(210.0 / 5357).epsilon(1e-12));
  CHECK(*r.tonne_day_utilization == doctest::Approx(0.41));
  CHECK(*r.mileage_utilization == doctest::Approx(0.44));

  // homogeneity: scaling numerators and denominators together changes nothing
  auto scaled = o;
  scaled.transport_work *= 2;
  scaled.fund_value *= 2;
  scaled.listed_tonnage *= 2;
  scaled.tons_carried *= 2;
  scaled.revenue *= 2;
  scaled.profit *= 2;
  const auto r2 = prod::derived_ratios(scaled);
  CHECK(*r2.tkm_per_currency ==
        doctest::Approx(*r.tkm_per_currency).epsilon(1e-12));
  CHECK(*r2.tkm_per_listed_tonne ==
        doctest::Approx(*r.tkm_per_listed_tonne).epsilon(1e-12));
}

TEST_CASE("zero denominators blank only the affected ratios") {
  auto o = make_obs("atp", 1995);
  o.listed_tonnage = 0;
  const auto r = prod::derived_ratios(o);
  CHECK(r.tkm_per_currency.has_value());
  CHECK_FALSE(r.tons_per_listed_tonne.has_value());
  CHECK_FALSE(r.tkm_per_listed_tonne.has_value());

  o = make_obs("atp", 1995);
  o.profit = 0;
  const auto r2 = prod::derived_ratios(o);
  REQUIRE(r2.profit_per_currency.has_value());
  CHECK(*r2.profit_per_currency == doctest::Approx(0.0));
}

TEST_CASE("bands aggregate by ratio of sums, not mean of ratios") {
  std::vector<prod::fleet_observation> obs;
  auto a = make_obs("a", 1995);
  a.transport_work = 1000;
  a.fund_value = 500;
  a.tonne_days_in_work = 20;  // key 0.2
  auto b = make_obs("b", 1995);
  b.transport_work = 3000;
  b.fund_value = 600;
  b.tonne_days_in_work = 25;  // key 0.25, same band
  obs = {a, b};
  const auto key = [](const prod::fleet_observation& o) {
    return prod::tonne_day_utilization(o.tonne_days_in_work,
                                       o.tonne_days_total);
  };
  const auto bands = prod::band_and_aggregate(obs, key, {0.3});
  REQUIRE(bands.size() == 2);
  CHECK(bands[0].count == 2);
  CHECK(bands[1].count == 0);
  // ratio of sums: (1000+3000)/(500+600), not the mean of 2.0 and 5.0
  CHECK(*bands[0].ratios.tkm_per_currency ==
        doctest::Approx(4000.0 / 1100).epsilon(1e-12));
  // empty band carries no ratios
  CHECK_FALSE(bands[1].ratios.tkm_per_currency.has_value());
}

TEST_CASE("band edges are half-open and must ascend") {
  std::vector<prod::fleet_observation> obs;
  for (double v : {10.0, 30.0, 30.0001, 50.0}) {
    auto o = make_obs("x", 1995);
    o.tonne_days_in_work = v;
    obs.push_back(o);
  }
  const auto key = [](const prod::fleet_observation& o) {
    return o.tonne_days_in_work / o.tonne_days_total;
  };
  const auto bands = prod::band_and_aggregate(obs, key, {0.3});
  CHECK(bands[0].count == 1);  // 0.10 only: 0.30 lands in the upper band
  CHECK(bands[1].count == 3);
  CHECK_THROWS_AS(prod::band_and_aggregate(obs, key, {0.3, 0.3}),
                  validation_error);
}

TEST_CASE("observation validation names the line") {
  auto o = make_obs("atp", 1995);
  o.loaded_km = o.total_km + 1;
  try {
    prod::validate(o, 7);
    FAIL("expected validation_error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("line 7") != std::string::npos);
  }
}

TEST_SUITE_END();
