// SPDX-License-Identifier: MIT
#include <sstream>
#include <vector>

#include <doctest.h>

#include "fleetcore/asset_ledger.hpp"
#include "fleetcore/errors.hpp"

using namespace fleetcore;

TEST_SUITE_BEGIN("asset_ledger");

TEST_CASE("official registry has nine groups with two active") {
  const ledger::registry reg = ledger::registry::official();
  CHECK(reg.size() == 9);
  int active = 0;
  for (const auto& [code, group] : reg.groups())
    if (group.act == ledger::activity::active) ++active;
  CHECK(active == 2);
  CHECK(reg.at("transport").act == ledger::activity::active);
  CHECK(reg.at("machines").act == ledger::activity::active);
  CHECK(reg.at("buildings").act == ledger::activity::passive);
}

TEST_CASE("registry rejects duplicates and unknown lookups") {
  ledger::registry reg;
  reg.add({"a", "A", ledger::activity::active});
  CHECK_THROWS_AS(reg.add({"a", "again", ledger::activity::passive}),
                  validation_error);
  CHECK_THROWS_AS(reg.at("missing"), validation_error);
  CHECK(reg.contains("a"));
  CHECK_FALSE(reg.contains("b"));
}

TEST_CASE("registry parses the csv schema and rejects bad activity") {
  std::istringstream good("code,name,activity\nx,X things,active\ny,Y,passive\n");
  const auto reg = ledger::registry::parse(good);
  CHECK(reg.size() == 2);
  CHECK(reg.at("x").act == ledger::activity::active);

  std::istringstream bad("code,name,activity\nx,X,sometimes\n");
  CHECK_THROWS_AS(ledger::registry::parse(bad), validation_error);
}

TEST_CASE("balance identity holds within rounding slack") {
  ledger::balance_record rec;
  rec.enterprise_id = "lviv";
  rec.period = 1996;
  rec.value_begin = 16919;
  rec.inflow_total = 509;
  rec.inflow_new = 274;
  rec.outflow_total = 271;
  rec.outflow_liquidated = 87;
  rec.value_end = 17157;
  CHECK_NOTHROW(ledger::validate(rec));

  rec.value_end = 17158;  // off by 1, still within the whole-thousand slack
  CHECK_THROWS_AS(ledger::validate(rec), validation_error);
  rec.value_end = 17157.4;
  CHECK_NOTHROW(ledger::validate(rec));
}

TEST_CASE("component flows may not exceed their totals") {
  ledger::balance_record rec;
  rec.enterprise_id = "x";
  rec.period = 1;
  rec.value_begin = 100;
  rec.inflow_total = 10;
  rec.inflow_new = 11;  // new > total
  rec.outflow_total = 5;
  rec.outflow_liquidated = 2;
  rec.value_end = 105;
  CHECK_THROWS_AS(ledger::validate(rec), validation_error);
  rec.inflow_new = 10;
  CHECK_NOTHROW(ledger::validate(rec));
  rec.outflow_liquidated = 6;
  CHECK_THROWS_AS(ledger::validate(rec), validation_error);
}

TEST_CASE("balance table round-trips byte for byte") {
  const std::string text =
      "enterprise_id,period,value_begin,inflow_total,inflow_new,"
      "outflow_total,outflow_liquidated,value_end\n"
      "lviv,1996,16919,509,274,271,87,17157\n"
      "atp-2,1995,1250.5,20.25,10,15.75,5,1255\n";
  std::istringstream in(text);
  const auto records = ledger::parse_balance_table(in);
  REQUIRE(records.size() == 2);
  std::ostringstream out;
  ledger::write_balance_table(out, records);
  CHECK(out.str() == text);

  std::istringstream again(out.str());
  const auto reparsed = ledger::parse_balance_table(again);
  std::ostringstream out2;
  ledger::write_balance_table(out2, reparsed);
  CHECK(out2.str() == out.str());
}

TEST_CASE("parse errors name the offending line") {
  std::istringstream bad(
      "enterprise_id,period,value_begin,inflow_total,inflow_new,"
      "outflow_total,outflow_liquidated,value_end\n"
      "lviv,1996,16919,509,274,271,87,99999\n");
  try {
    ledger::parse_balance_table(bad);
    FAIL("expected validation_error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("structure shares sum to 100 and scale-invariantly") {
  std::vector<ledger::group_value> rows = {
      {"buildings", 3568}, {"structures", 558}, {"transmission", 101},
      {"machines", 1302},  {"transport", 11312}, {"instruments", 51},
      {"other", 17}};
  const auto shares = ledger::structure_shares(rows);
  double total = 0;
  for (const auto& s : shares) total += s.share;
  CHECK(total == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(shares[0].share == doctest::Approx(21.1).epsilon(0.01));
  CHECK(shares[4].share == doctest::Approx(66.9).epsilon(0.01));

  for (auto& r : rows) r.value *= 3.5;
  const auto scaled = ledger::structure_shares(rows);
  for (std::size_t i = 0; i < shares.size(); ++i)
    CHECK(scaled[i].share == doctest::Approx(shares[i].share).epsilon(1e-12));
}

TEST_CASE("active share matches the hand split") {
  const ledger::registry reg = ledger::registry::official();
  const std::vector<ledger::group_value> rows = {{"transport", 57.2},
                                                 {"buildings", 42.8}};
  CHECK(ledger::active_share(reg, rows) == doctest::Approx(57.2).epsilon(1e-12));
  const std::vector<ledger::group_value> unknown = {{"rockets", 1.0}};
  CHECK_THROWS_AS(ledger::active_share(reg, unknown), validation_error);
}

TEST_CASE("structure shares reject degenerate totals") {
  CHECK_THROWS_AS(ledger::structure_shares({}), validation_error);
  CHECK_THROWS_AS(ledger::structure_shares({{"a", 0.0}}), validation_error);
  CHECK_THROWS_AS(ledger::structure_shares({{"a", -1.0}, {"b", 2.0}}),
                  validation_error);
}

TEST_SUITE_END();
