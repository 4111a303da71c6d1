// SPDX-License-Identifier: MIT
#include "fleetcore/productivity.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "fleetcore/errors.hpp"

namespace fleetcore::prod {

namespace {

std::string where(const fleet_observation& o, std::size_t line) {
  std::string loc =
      "observation " + o.enterprise_id + "/" + std::to_string(o.year);
  if (line) loc += " (line " + std::to_string(line) + ")";
  return loc;
}

}  // namespace

void validate(const fleet_observation& o, std::size_t line) {
  const double fields[] = {o.transport_work,     o.tons_carried,
                           o.revenue,            o.fund_value,
                           o.transport_means_value, o.tonne_days_in_work,
                           o.tonne_days_total,   o.loaded_km,
                           o.total_km,           o.listed_tonnage};
  for (double v : fields)
    if (v < 0) throw validation_error(where(o, line) + ": negative field");
  if (o.tonne_days_in_work > o.tonne_days_total)
    throw validation_error(where(o, line) +
                           ": tonne_days_in_work exceeds tonne_days_total");
  if (o.loaded_km > o.total_km)
    throw validation_error(where(o, line) + ": loaded_km exceeds total_km");
}

double adjusted_transport_work(double tons, double distance_km, double t_norm,
                               double t_fact, rounding_mode mode) {
  if (!(t_fact > 0))
    throw validation_error("adjusted_transport_work: t_fact must be positive");
  if (!(tons > 0) || !(distance_km > 0) || !(t_norm > 0))
    throw validation_error("adjusted_transport_work: inputs must be positive");
  double time_ratio = t_norm / t_fact;
  if (mode == rounding_mode::paper)
    time_ratio = round_significant(time_ratio, 4);
  return tons * distance_km * time_ratio;
}

double fondovidacha(double transport_work, double fund_value) {
  if (!(fund_value > 0))
    throw validation_error("fondovidacha: fund_value must be positive");
  if (transport_work < 0)
    throw validation_error("fondovidacha: negative transport work");
  return transport_work / fund_value;
}

double marginal_fondovidacha(double p0, double p1, double f0, double f1) {
  if (f1 == f0)
    throw numeric_error("marginal_fondovidacha: fund value did not change");
  return (p1 - p0) / (f1 - f0);
}

const char* to_string(quadrant q) {
  switch (q) {
    case quadrant::q1: return "I";
    case quadrant::q2: return "II";
    case quadrant::q3: return "III";
    case quadrant::q4: return "IV";
    default: return "boundary";
  }
}

const char* to_string(verdict v) {
  switch (v) {
    case verdict::improved: return "improved";
    case verdict::worsened: return "worsened";
    default: return "unchanged";
  }
}

efficiency_result efficiency_assessment(double p0, double p1, double f0,
                                        double f1) {
  if (!(f0 > 0) || !(f1 > 0) || !(p1 > 0))
    throw validation_error(
        "efficiency_assessment: fund values and current output must be positive");
  efficiency_result res;
  res.full = p1 / f1;
  const double dp = p1 - p0;
  const double df = f1 - f0;
  if (df != 0) {
    res.marginal = dp / df;
    res.k = res.marginal / res.full;
  } else {
    res.marginal = std::numeric_limits<double>::quiet_NaN();
    res.k_finite = dp == 0;  // K degenerates to 0/0 only when nothing moved
    res.k = res.k_finite ? 0.0 : std::numeric_limits<double>::quiet_NaN();
  }
  if (p0 > 0 && f0 != 0 && f1 / f0 != 1.0) {
    res.index_form = (p1 / p0 - 1.0) / (f1 / f0 - 1.0);
  } else {
    res.index_form = std::numeric_limits<double>::quiet_NaN();
    res.index_form_finite = false;
  }

  if (dp > 0 && df > 0) res.quad = quadrant::q1;
  else if (dp > 0 && df < 0) res.quad = quadrant::q2;
  else if (dp < 0 && df < 0) res.quad = quadrant::q3;
  else if (dp < 0 && df > 0) res.quad = quadrant::q4;
  else res.quad = quadrant::boundary;

  switch (res.quad) {
    case quadrant::q1:
      res.verd = res.k > 1 ? verdict::improved
                           : (res.k == 1 ? verdict::unchanged : verdict::worsened);
      break;
    case quadrant::q2:
      res.verd = verdict::improved;  // more output on a smaller fund
      break;
    case quadrant::q3:
      res.verd = res.k < 1 ? verdict::improved
                           : (res.k == 1 ? verdict::unchanged : verdict::worsened);
      break;
    case quadrant::q4:
      res.verd = verdict::worsened;
      break;
    case quadrant::boundary:
      if (dp == 0 && df == 0) res.verd = verdict::unchanged;
      else if (dp > 0 || df < 0) res.verd = verdict::improved;
      else res.verd = verdict::worsened;
      break;
  }
  return res;
}

double tonne_day_utilization(double tonne_days_in_work,
                             double tonne_days_total) {
  if (!(tonne_days_total > 0))
    throw validation_error("tonne_day_utilization: zero total tonne-days");
  if (tonne_days_in_work < 0 || tonne_days_in_work > tonne_days_total)
    throw validation_error(
        "tonne_day_utilization: in-work tonne-days out of [0, total]");
  return tonne_days_in_work / tonne_days_total;
}

double mileage_utilization(double loaded_km, double total_km) {
  if (!(total_km > 0))
    throw validation_error("mileage_utilization: zero total mileage");
  if (loaded_km < 0 || loaded_km > total_km)
    throw validation_error("mileage_utilization: loaded km out of [0, total]");
  return loaded_km / total_km;
}

derived_ratios_result derived_ratios(const fleet_observation& o) {
  derived_ratios_result r;
  if (o.fund_value > 0) {
    r.tkm_per_currency = o.transport_work / o.fund_value;
    r.tons_per_currency = o.tons_carried / o.fund_value;
    r.revenue_per_currency = o.revenue / o.fund_value;
    r.profit_per_currency = o.profit / o.fund_value;
  }
  if (o.listed_tonnage > 0) {
    r.tons_per_listed_tonne = o.tons_carried / o.listed_tonnage;
    r.tkm_per_listed_tonne = o.transport_work / o.listed_tonnage;
  }
  if (o.tonne_days_total > 0)
    r.tonne_day_utilization = o.tonne_days_in_work / o.tonne_days_total;
  if (o.total_km > 0) r.mileage_utilization = o.loaded_km / o.total_km;
  return r;
}

std::vector<band_row> band_and_aggregate(
    const std::vector<fleet_observation>& observations,
    const std::function<double(const fleet_observation&)>& key,
    const std::vector<double>& edges) {
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (!(edges[i - 1] < edges[i]))
      throw validation_error("band_and_aggregate: edges must be ascending");
  const double lowest = std::numeric_limits<double>::lowest();
  const double highest = std::numeric_limits<double>::max();
  std::vector<band_row> bands;
  std::vector<fleet_observation> sums;
  for (std::size_t b = 0; b <= edges.size(); ++b) {
    band_row row;
    row.lower = b == 0 ? lowest : edges[b - 1];
    row.upper = b == edges.size() ? highest : edges[b];
    bands.push_back(row);
    sums.emplace_back();
  }
  for (const auto& o : observations) {
    const double v = key(o);
    std::size_t b = 0;
    while (b < edges.size() && v >= edges[b]) ++b;
    fleet_observation& s = sums[b];
    s.transport_work += o.transport_work;
    s.tons_carried += o.tons_carried;
    s.revenue += o.revenue;
    s.profit += o.profit;
    s.fund_value += o.fund_value;
    s.transport_means_value += o.transport_means_value;
    s.tonne_days_in_work += o.tonne_days_in_work;
    s.tonne_days_total += o.tonne_days_total;
    s.loaded_km += o.loaded_km;
    s.total_km += o.total_km;
    s.listed_tonnage += o.listed_tonnage;
    ++bands[b].count;
  }
  for (std::size_t b = 0; b < bands.size(); ++b) {
    bands[b].ratios = derived_ratios(sums[b]);
    char buf[64];
    if (b == 0)
      std::snprintf(buf, sizeof buf, "< %g", edges.empty() ? 0.0 : edges[0]);
    else if (b == edges.size())
      std::snprintf(buf, sizeof buf, ">= %g", edges[b - 1]);
    else
      // no comma: labels land in unquoted CSV cells
      std::snprintf(buf, sizeof buf, "[%g..%g)", edges[b - 1], edges[b]);
    bands[b].label = edges.empty() ? "all" : buf;
  }
  return bands;
}

}  // namespace fleetcore::prod
