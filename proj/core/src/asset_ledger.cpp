// SPDX-License-Identifier: MIT
#include "fleetcore/asset_ledger.hpp"

#include <cmath>
#include <ostream>

#include "fleetcore/csv.hpp"
#include "fleetcore/errors.hpp"

namespace fleetcore::ledger {

namespace {

const char* const balance_header[] = {
    "enterprise_id",  "period",       "value_begin",        "inflow_total",
    "inflow_new",     "outflow_total", "outflow_liquidated", "value_end"};

std::string where(const balance_record& r, std::size_t line) {
  std::string loc = "record " + r.enterprise_id + "/" + std::to_string(r.period);
  if (line) loc += " (line " + std::to_string(line) + ")";
  return loc;
}

}  // namespace

void registry::add(asset_group group) {
  if (group.code.empty()) throw validation_error("registry: empty group code");
  auto [it, inserted] = groups_.emplace(group.code, std::move(group));
  if (!inserted)
    throw validation_error("registry: duplicate group code '" + it->first + "'");
}

const asset_group& registry::at(const std::string& code) const {
  auto it = groups_.find(code);
  if (it == groups_.end())
    throw validation_error("unknown asset group code '" + code + "'");
  return it->second;
}

bool registry::contains(const std::string& code) const {
  return groups_.count(code) != 0;
}

registry registry::parse(std::istream& in) {
  csv::table t = csv::read(in);
  if (t.header != std::vector<std::string>{"code", "name", "activity"})
    throw validation_error("registry header must be: code,name,activity");
  registry reg;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    const std::size_t line = t.line_numbers[i];
    if (row.size() != 3)
      throw validation_error("line " + std::to_string(line) +
                             ": expected 3 fields, got " +
                             std::to_string(row.size()));
    activity act;
    if (row[2] == "active")
      act = activity::active;
    else if (row[2] == "passive")
      act = activity::passive;
    else
      throw validation_error("line " + std::to_string(line) +
                             ": activity must be 'active' or 'passive', got '" +
                             row[2] + "'");
    reg.add({row[0], row[1], act});
  }
  return reg;
}

registry registry::official() {
  registry reg;
  reg.add({"buildings", "Buildings", activity::passive});
  reg.add({"structures", "Structures", activity::passive});
  reg.add({"transmission", "Transmission devices", activity::passive});
  reg.add({"machines", "Machines and equipment", activity::active});
  reg.add({"transport", "Transport means", activity::active});
  reg.add({"instruments", "Instruments", activity::passive});
  reg.add({"production_inventory", "Production inventory", activity::passive});
  reg.add({"household_inventory", "Household inventory", activity::passive});
  reg.add({"other", "Other fixed assets", activity::passive});
  return reg;
}

void validate(const balance_record& r, std::size_t line) {
  const double currency[] = {r.value_begin,   r.inflow_total,
                             r.inflow_new,    r.outflow_total,
                             r.outflow_liquidated, r.value_end};
  for (double v : currency)
    if (v < 0)
      throw validation_error(where(r, line) + ": negative currency field");
  if (r.inflow_new > r.inflow_total)
    throw validation_error(where(r, line) + ": inflow_new exceeds inflow_total");
  if (r.outflow_liquidated > r.outflow_total)
    throw validation_error(where(r, line) +
                           ": outflow_liquidated exceeds outflow_total");
  const double expected = r.value_begin + r.inflow_total - r.outflow_total;
  if (std::fabs(r.value_end - expected) > balance_tolerance)
    throw validation_error(
        where(r, line) + ": balance identity violated: value_end " +
        csv::format_number(r.value_end) + " vs begin + inflow - outflow " +
        csv::format_number(expected));
}

std::vector<balance_record> parse_balance_table(std::istream& in) {
  csv::table t = csv::read(in);
  const std::vector<std::string> expected(std::begin(balance_header),
                                          std::end(balance_header));
  if (t.header != expected) {
    std::string want;
    for (const auto& h : expected) want += (want.empty() ? "" : ",") + h;
    throw validation_error("balance table header mismatch: expected " + want);
  }
  std::vector<balance_record> records;
  records.reserve(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    const std::size_t line = t.line_numbers[i];
    if (row.size() != 8)
      throw validation_error("line " + std::to_string(line) +
                             ": expected 8 fields, got " +
                             std::to_string(row.size()));
    balance_record r;
    r.enterprise_id = row[0];
    if (r.enterprise_id.empty())
      throw validation_error("line " + std::to_string(line) +
                             ": empty enterprise_id");
    r.period = static_cast<int>(csv::to_integer(row[1], line));
    r.value_begin = csv::to_number(row[2], line);
    r.inflow_total = csv::to_number(row[3], line);
    r.inflow_new = csv::to_number(row[4], line);
    r.outflow_total = csv::to_number(row[5], line);
    r.outflow_liquidated = csv::to_number(row[6], line);
    r.value_end = csv::to_number(row[7], line);
    validate(r, line);
    records.push_back(std::move(r));
  }
  return records;
}

void write_balance_table(std::ostream& out,
                         const std::vector<balance_record>& records) {
  out << "enterprise_id,period,value_begin,inflow_total,inflow_new,"
         "outflow_total,outflow_liquidated,value_end\n";
  for (const auto& r : records) {
    out << r.enterprise_id << ',' << r.period << ','
        << csv::format_number(r.value_begin) << ','
        << csv::format_number(r.inflow_total) << ','
        << csv::format_number(r.inflow_new) << ','
        << csv::format_number(r.outflow_total) << ','
        << csv::format_number(r.outflow_liquidated) << ','
        << csv::format_number(r.value_end) << '\n';
  }
}

std::vector<structure_row> structure_shares(
    const std::vector<group_value>& rows) {
  if (rows.empty()) throw validation_error("structure_shares: no rows");
  double total = 0;
  for (const auto& row : rows) {
    if (row.value < 0)
      throw validation_error("structure_shares: negative value for group '" +
                             row.group + "'");
    total += row.value;
  }
  if (total <= 0)
    throw validation_error("structure_shares: ledger total is zero");
  std::vector<structure_row> result;
  result.reserve(rows.size());
  for (const auto& row : rows)
    result.push_back({row.group, row.value, 100.0 * row.value / total});
  return result;
}

double active_share(const registry& reg, const std::vector<group_value>& rows) {
  double active = 0;
  for (const auto& share : structure_shares(rows))
    if (reg.at(share.group).act == activity::active) active += share.share;
  return active;
}

}  // namespace fleetcore::ledger
