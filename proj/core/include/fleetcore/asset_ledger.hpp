// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace fleetcore::ledger {

enum class activity { active, passive };

struct asset_group {
  std::string code;
  std::string name;
  activity act = activity::passive;
};

// Classification registry mapping group codes to names and the active/passive
// flag. Taxonomies live in data files (CSV: code,name,activity) so alternative
// classifications load without code changes; unknown codes are rejected rather
// than defaulted, since silent misclassification would corrupt active/passive
// splits.
class registry {
 public:
  void add(asset_group group);  // duplicate code -> validation_error
  const asset_group& at(const std::string& code) const;
  bool contains(const std::string& code) const;
  std::size_t size() const { return groups_.size(); }
  const std::map<std::string, asset_group>& groups() const { return groups_; }

  static registry parse(std::istream& in);
  // The nine official top-level groups; transport means and
  // machines-and-equipment are the active part, everything else passive.
  static registry official();

 private:
  std::map<std::string, asset_group> groups_;
};

// One enterprise-period row of an asset balance, in thousand currency units.
struct balance_record {
  std::string enterprise_id;
  int period = 0;
  double value_begin = 0;
  double inflow_total = 0;
  double inflow_new = 0;
  double outflow_total = 0;
  double outflow_liquidated = 0;
  double value_end = 0;
};

// Absolute slack on value_end = value_begin + inflow_total - outflow_total;
// source tables are rounded to whole thousands, stricter tolerance rejects
// genuine rows.
inline constexpr double balance_tolerance = 0.5;

// Throws validation_error naming the record (and source line when nonzero).
void validate(const balance_record& record, std::size_t line = 0);

// Header must name the eight balance_record fields in order.
std::vector<balance_record> parse_balance_table(std::istream& in);
void write_balance_table(std::ostream& out,
                         const std::vector<balance_record>& records);

struct group_value {
  std::string group;
  double value = 0;
};

struct structure_row {
  std::string group;
  double value = 0;
  double share = 0;  // percent of the ledger total
};

// share_i = 100 * value_i / total; requires total > 0 and each value >= 0.
std::vector<structure_row> structure_shares(
    const std::vector<group_value>& rows);

// Percent of total value in groups the registry flags active.
double active_share(const registry& reg, const std::vector<group_value>& rows);

}  // namespace fleetcore::ledger
