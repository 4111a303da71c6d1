// SPDX-License-Identifier: MIT
#include "fleetcore/econometrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fleetcore/csv.hpp"
#include "fleetcore/errors.hpp"

namespace fleetcore::econ {

namespace {

constexpr double nan_marker = std::numeric_limits<double>::quiet_NaN();

// Solves A x = b in place by Gaussian elimination with partial pivoting.
// A pivot below tol relative to the matrix scale raises numeric_error naming
// the offending column through column_name.
std::vector<double> solve(std::vector<std::vector<double>> a,
                          std::vector<double> b,
                          const char* column_prefix) {
  const std::size_t n = b.size();
  double scale = 0;
  for (const auto& row : a)
    for (double v : row) scale = std::max(scale, std::fabs(v));
  if (scale == 0) scale = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    if (std::fabs(a[pivot][col]) <= 1e-12 * scale)
      throw numeric_error(std::string("singular fit: column ") +
                          column_prefix + std::to_string(col) +
                          " is linearly dependent");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Full inverse by Gauss-Jordan, for coefficient covariances.
std::vector<std::vector<double>> invert(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  double scale = 0;
  for (const auto& row : a)
    for (double v : row) scale = std::max(scale, std::fabs(v));
  if (scale == 0) scale = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    if (std::fabs(a[pivot][col]) <= 1e-12 * scale)
      throw numeric_error("singular fit: normal matrix not invertible");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const double d = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

struct fit_stats {
  double sse = 0;
  double sst = 0;
};

fit_stats residual_stats(const sample& s, const regression_model& m) {
  fit_stats st;
  double wsum = 0, ysum = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    wsum += s.weight(i);
    ysum += s.weight(i) * s.y[i];
  }
  const double ybar = ysum / wsum;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<double> xi(s.factors());
    for (std::size_t j = 0; j < s.factors(); ++j) xi[j] = s.x[j][i];
    const double e = s.y[i] - predict(m, xi);
    st.sse += s.weight(i) * e * e;
    st.sst += s.weight(i) * (s.y[i] - ybar) * (s.y[i] - ybar);
  }
  return st;
}

// Shared tail: determination, eta, F, confidence bounds, elasticity.
void finish(regression_model& m, const sample& s, std::size_t k,
            const std::vector<double>& slope_var) {
  const fit_stats st = residual_stats(s, m);
  if (st.sst > 0) {
    m.determination = std::clamp(1.0 - st.sse / st.sst, 0.0, 1.0);
  } else {
    m.determination = 0;  // constant response: nothing to explain
  }
  m.eta = std::sqrt(m.determination);
  m.f_statistic = f_statistic(m.determination, m.n_eff, static_cast<double>(k));
  m.f_finite = std::isfinite(m.f_statistic);
  m.slope_std_error.clear();
  for (double v : slope_var)
    m.slope_std_error.push_back(v > 0 ? std::sqrt(v) : 0.0);
  m.marginal_error.clear();
  m.confidence_low.clear();
  m.confidence_high.clear();
  for (std::size_t j = 0; j < m.slope_std_error.size(); ++j) {
    const double marginal = m.t_value * m.slope_std_error[j];
    m.marginal_error.push_back(marginal);
    const auto [lo, hi] = slope_confidence(m.coef[j + 1], marginal);
    m.confidence_low.push_back(lo);
    m.confidence_high.push_back(hi);
  }
  m.elasticity = elasticity(m, m.mean_x, m.mean_y);
}

}  // namespace

double sample::total_weight() const {
  double t = 0;
  for (std::size_t i = 0; i < size(); ++i) t += weight(i);
  return t;
}

void validate(const sample& s) {
  for (const auto& col : s.x)
    if (col.size() != s.y.size())
      throw validation_error("sample: factor column length mismatch");
  if (!s.w.empty() && s.w.size() != s.y.size())
    throw validation_error("sample: weight column length mismatch");
  for (double v : s.y)
    if (!std::isfinite(v)) throw validation_error("sample: non-finite y value");
  for (const auto& col : s.x)
    for (double v : col)
      if (!std::isfinite(v))
        throw validation_error("sample: non-finite x value");
  for (double v : s.w)
    if (!(v >= 0) || !std::isfinite(v))
      throw validation_error("sample: weights must be finite and >= 0");
}

const char* to_string(model_form form) {
  switch (form) {
    case model_form::linear: return "linear";
    case model_form::parabola: return "parabola";
    default: return "multilinear";
  }
}

regression_model fit_linear(const sample& s, double t_value) {
  validate(s);
  if (s.factors() < 1) throw validation_error("fit_linear: no factor column");
  if (s.size() < 3) throw validation_error("fit_linear: needs n >= 3");
  const std::vector<double>& x = s.x[0];
  const double w = s.total_weight();
  if (!(w > 2)) throw validation_error("fit_linear: total weight must exceed 2");
  double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    xbar += s.weight(i) * x[i];
    ybar += s.weight(i) * s.y[i];
  }
  xbar /= w;
  ybar /= w;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    sxx += s.weight(i) * (x[i] - xbar) * (x[i] - xbar);
    sxy += s.weight(i) * (x[i] - xbar) * (s.y[i] - ybar);
  }
  if (!(sxx > 0)) throw numeric_error("singular fit: x has zero variance");

  regression_model m;
  m.form = model_form::linear;
  m.t_value = t_value;
  m.n_eff = w;
  m.mean_x = {xbar};
  m.mean_y = ybar;
  const double b = sxy / sxx;
  m.coef = {ybar - b * xbar, b};

  double syy = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    syy += s.weight(i) * (s.y[i] - ybar) * (s.y[i] - ybar);
  m.pearson = syy > 0 ? sxy / std::sqrt(sxx * syy) : 0.0;

  double sse = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double e = s.y[i] - (m.coef[0] + b * x[i]);
    sse += s.weight(i) * e * e;
  }
  const double df = w - 2;
  const double s2 = df > 0 ? sse / df : 0.0;
  finish(m, s, 1, {s2 / sxx});
  return m;
}

regression_model fit_parabola(const sample& s, double t_value) {
  validate(s);
  if (s.factors() < 1) throw validation_error("fit_parabola: no factor column");
  if (s.size() < 4) throw validation_error("fit_parabola: needs n >= 4");
  const std::vector<double>& x = s.x[0];
  const double w = s.total_weight();
  if (!(w > 3))
    throw validation_error("fit_parabola: total weight must exceed 3");
  double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    xbar += s.weight(i) * x[i];
    ybar += s.weight(i) * s.y[i];
  }
  xbar /= w;
  ybar /= w;

  // Centered powers condition the normal system; coefficients translate back
  // to the raw basis below.
  double su1 = 0, su2 = 0, su3 = 0, su4 = 0, sy = 0, suy = 0, su2y = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double wi = s.weight(i);
    const double u = x[i] - xbar;
    su1 += wi * u;
    su2 += wi * u * u;
    su3 += wi * u * u * u;
    su4 += wi * u * u * u * u;
    sy += wi * s.y[i];
    suy += wi * u * s.y[i];
    su2y += wi * u * u * s.y[i];
  }
  std::vector<std::vector<double>> normal = {
      {w, su1, su2}, {su1, su2, su3}, {su2, su3, su4}};
  const std::vector<double> rhs = {sy, suy, su2y};
  const std::vector<double> cc = solve(normal, rhs, "u^");

  regression_model m;
  m.form = model_form::parabola;
  m.t_value = t_value;
  m.n_eff = w;
  m.mean_x = {xbar};
  m.mean_y = ybar;
  // y = a' + b'u + c'u^2 with u = x - xbar
  const double ac = cc[0], bc = cc[1], c = cc[2];
  m.coef = {ac - bc * xbar + c * xbar * xbar, bc - 2 * c * xbar, c};

  double sse = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double e = s.y[i] - (m.coef[0] + m.coef[1] * x[i] + c * x[i] * x[i]);
    sse += s.weight(i) * e * e;
  }
  const double df = w - 3;
  const double s2 = df > 0 ? sse / df : 0.0;
  const auto cov = invert(normal);  // times s2 gives the centered covariance
  // raw b = b' - 2 xbar c', so its variance carries the cross term
  const double var_b =
      s2 * (cov[1][1] + 4 * xbar * xbar * cov[2][2] - 4 * xbar * cov[1][2]);
  const double var_c = s2 * cov[2][2];
  m.pearson = nan_marker;  // linear fits only
  finish(m, s, 2, {var_b, var_c});
  return m;
}

regression_model fit_multilinear(const sample& s, double t_value) {
  validate(s);
  const std::size_t k = s.factors();
  if (k < 1) throw validation_error("fit_multilinear: no factor columns");
  if (s.size() < k + 2)
    throw validation_error("fit_multilinear: needs n >= factors + 2");
  const double w = s.total_weight();
  if (!(w > static_cast<double>(k) + 1))
    throw validation_error("fit_multilinear: total weight too small");

  // Normal system over (1, x1 .. xk).
  std::vector<std::vector<double>> normal(k + 1, std::vector<double>(k + 1, 0));
  std::vector<double> rhs(k + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double wi = s.weight(i);
    std::vector<double> row(k + 1);
    row[0] = 1;
    for (std::size_t j = 0; j < k; ++j) row[j + 1] = s.x[j][i];
    for (std::size_t r = 0; r <= k; ++r) {
      for (std::size_t c = 0; c <= k; ++c) normal[r][c] += wi * row[r] * row[c];
      rhs[r] += wi * row[r] * s.y[i];
    }
  }

  regression_model m;
  m.form = model_form::multilinear;
  m.t_value = t_value;
  m.n_eff = w;
  m.coef = solve(normal, rhs, "x");
  m.mean_x.resize(k);
  for (std::size_t j = 0; j < k; ++j) m.mean_x[j] = normal[0][j + 1] / w;
  m.mean_y = rhs[0] / w;

  double sse = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double yhat = m.coef[0];
    for (std::size_t j = 0; j < k; ++j) yhat += m.coef[j + 1] * s.x[j][i];
    const double e = s.y[i] - yhat;
    sse += s.weight(i) * e * e;
  }
  const double df = w - static_cast<double>(k) - 1;
  const double s2 = df > 0 ? sse / df : 0.0;
  const auto cov = invert(normal);
  std::vector<double> slope_var(k);
  for (std::size_t j = 0; j < k; ++j) slope_var[j] = s2 * cov[j + 1][j + 1];
  m.pearson = k == 1 ? pearson_r(s.x[0], s.y, s.w) : nan_marker;
  finish(m, s, k, slope_var);
  return m;
}

double predict(const regression_model& m, const std::vector<double>& x) {
  switch (m.form) {
    case model_form::linear:
      if (x.empty()) throw validation_error("predict: needs one coordinate");
      return m.coef[0] + m.coef[1] * x[0];
    case model_form::parabola:
      if (x.empty()) throw validation_error("predict: needs one coordinate");
      return m.coef[0] + m.coef[1] * x[0] + m.coef[2] * x[0] * x[0];
    default: {
      if (x.size() + 1 != m.coef.size())
        throw validation_error("predict: expected " +
                               std::to_string(m.coef.size() - 1) +
                               " coordinates");
      double y = m.coef[0];
      for (std::size_t j = 0; j < x.size(); ++j) y += m.coef[j + 1] * x[j];
      return y;
    }
  }
}

double predict1(const regression_model& m, double x) { return predict(m, {x}); }

double pearson_r(const std::vector<double>& xs, const std::vector<double>& ys) {
  return pearson_r(xs, ys, {});
}

double pearson_r(const std::vector<double>& xs, const std::vector<double>& ys,
                 const std::vector<double>& w) {
  if (xs.size() != ys.size() || xs.empty())
    throw validation_error("pearson_r: length mismatch or empty input");
  if (!w.empty() && w.size() != xs.size())
    throw validation_error("pearson_r: weight length mismatch");
  double wsum = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double wi = w.empty() ? 1.0 : w[i];
    wsum += wi;
    sx += wi * xs[i];
    sy += wi * ys[i];
  }
  const double xbar = sx / wsum, ybar = sy / wsum;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double wi = w.empty() ? 1.0 : w[i];
    sxx += wi * (xs[i] - xbar) * (xs[i] - xbar);
    syy += wi * (ys[i] - ybar) * (ys[i] - ybar);
    sxy += wi * (xs[i] - xbar) * (ys[i] - ybar);
  }
  if (!(sxx > 0) || !(syy > 0))
    throw numeric_error("pearson_r: zero variance, correlation undefined");
  return sxy / std::sqrt(sxx * syy);
}

double correlation_ratio(const sample& s, const regression_model& m) {
  validate(s);
  const fit_stats st = residual_stats(s, m);
  if (!(st.sst > 0))
    throw numeric_error("correlation_ratio: constant response, undefined");
  return std::sqrt(std::clamp(1.0 - st.sse / st.sst, 0.0, 1.0));
}

double f_statistic(double determination, double n, double k) {
  if (determination < 0 || determination > 1)
    throw validation_error("f_statistic: determination outside [0, 1]");
  if (!(n > k + 1))
    throw validation_error("f_statistic: needs n > k + 1");
  if (determination == 1) return std::numeric_limits<double>::infinity();
  return (determination / k) / ((1.0 - determination) / (n - k - 1));
}

std::pair<double, double> slope_confidence(double coefficient,
                                           double marginal_error) {
  if (marginal_error < 0)
    throw validation_error("slope_confidence: negative marginal error");
  return {coefficient - marginal_error, coefficient + marginal_error};
}

std::vector<double> elasticity(const regression_model& m,
                               const std::vector<double>& mean_x,
                               double mean_y) {
  if (mean_y == 0)
    return std::vector<double>(
        m.form == model_form::parabola ? 1 : m.coef.size() - 1, nan_marker);
  if (m.form == model_form::parabola) {
    const double x = mean_x.at(0);
    return {(m.coef[1] + 2 * m.coef[2] * x) * x / mean_y};
  }
  std::vector<double> e;
  for (std::size_t j = 0; j + 1 < m.coef.size(); ++j)
    e.push_back(m.coef[j + 1] * mean_x.at(j) / mean_y);
  return e;
}

std::vector<double> marginal_effect(const regression_model& m, double dx) {
  return marginal_effect(m, dx, m.form == model_form::parabola
                                    ? m.mean_x.at(0)
                                    : 0.0);
}

std::vector<double> marginal_effect(const regression_model& m, double dx,
                                    double at_x) {
  if (m.form == model_form::parabola)
    return {(m.coef[1] + 2 * m.coef[2] * at_x) * dx};
  std::vector<double> e;
  for (std::size_t j = 0; j + 1 < m.coef.size(); ++j)
    e.push_back(m.coef[j + 1] * dx);
  return e;
}

double parabola_extremum(const regression_model& m) {
  if (m.form != model_form::parabola)
    throw validation_error("parabola_extremum: model is not a parabola");
  if (m.coef[2] == 0)
    throw numeric_error("parabola_extremum: zero curvature, no extremum");
  return -m.coef[1] / (2 * m.coef[2]);
}

std::vector<std::vector<double>> correlation_matrix(
    const std::vector<std::vector<double>>& columns) {
  const std::size_t k = columns.size();
  std::vector<std::vector<double>> r(k, std::vector<double>(k, nan_marker));
  for (std::size_t i = 0; i < k; ++i) {
    r[i][i] = 1.0;  // reported as 1 even for degenerate columns
    for (std::size_t j = i + 1; j < k; ++j) {
      double value = nan_marker;
      try {
        value = pearson_r(columns[i], columns[j]);
      } catch (const numeric_error&) {
        // zero-variance column: leave the undefined marker
      }
      r[i][j] = r[j][i] = value;
    }
  }
  return r;
}

const char* to_string(reserve_mode mode) {
  switch (mode) {
    case reserve_mode::minimal: return "minimal";
    case reserve_mode::optimal: return "optimal";
    default: return "maximal";
  }
}

reserve_report reserve_estimate(const sample& s, const regression_model& m,
                                reserve_mode mode) {
  validate(s);
  if (m.form == model_form::parabola)
    throw validation_error("reserve_estimate: needs a linear-in-x model");
  const std::size_t k = s.factors();
  if (m.coef.size() != k + 1)
    throw validation_error("reserve_estimate: model and sample factor counts differ");
  const double w = s.total_weight();
  if (!(w > 0)) throw validation_error("reserve_estimate: zero total weight");

  reserve_report rep;
  rep.mode = mode;
  double ybar = 0;
  for (std::size_t i = 0; i < s.size(); ++i) ybar += s.weight(i) * s.y[i];
  ybar /= w;

  for (std::size_t j = 0; j < k; ++j) {
    double xbar = 0;
    for (std::size_t i = 0; i < s.size(); ++i) xbar += s.weight(i) * s.x[j][i];
    xbar /= w;

    double dx = 0;
    if (mode == reserve_mode::minimal) {
      double w_below = 0, sum_below = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (s.x[j][i] < xbar) {
          w_below += s.weight(i);
          sum_below += s.weight(i) * s.x[j][i];
        }
      // lifting the laggards to the mean buys, averaged over everyone,
      // share_below * (mean - mean_below)
      if (w_below > 0) dx = (w_below / w) * (xbar - sum_below / w_below);
    } else if (mode == reserve_mode::optimal) {
      double w_above = 0, sum_above = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (s.x[j][i] > xbar) {
          w_above += s.weight(i);
          sum_above += s.weight(i) * s.x[j][i];
        }
      if (w_above > 0) dx = sum_above / w_above - xbar;
    } else {
      double max_x = s.x[j].empty() ? xbar : s.x[j][0];
      for (double v : s.x[j]) max_x = std::max(max_x, v);
      dx = max_x - xbar;
    }
    rep.rows.push_back({j, dx, m.coef[j + 1] * dx});
    rep.total_delta_y += m.coef[j + 1] * dx;
  }
  rep.percent_of_mean = ybar != 0 ? 100.0 * rep.total_delta_y / ybar : nan_marker;
  return rep;
}

std::optional<double> enterprise_efficiency(const regression_model& m,
                                            const std::vector<double>& x,
                                            double y_actual) {
  const double expected = predict(m, x);
  if (!(expected > 0)) return std::nullopt;
  return y_actual / expected;
}

f_table parse_f_table(std::istream& in) {
  csv::table t = csv::read(in);
  if (t.header != std::vector<std::string>{"df1", "df2", "critical"})
    throw validation_error("F table header must be: df1,df2,critical");
  f_table table;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    const std::size_t line = t.line_numbers[i];
    if (row.size() != 3)
      throw validation_error("line " + std::to_string(line) +
                             ": expected 3 fields");
    f_table::entry e;
    e.df1 = static_cast<int>(csv::to_integer(row[0], line));
    e.df2 = static_cast<int>(csv::to_integer(row[1], line));
    e.critical = csv::to_number(row[2], line);
    if (e.df1 < 1 || e.df2 < 1 || !(e.critical > 0))
      throw validation_error("line " + std::to_string(line) +
                             ": invalid F table entry");
    table.entries.push_back(e);
  }
  if (table.entries.empty()) throw validation_error("F table: no entries");
  return table;
}

double f_critical(const f_table& table, int df1, double df2) {
  const f_table::entry* best = nullptr;
  for (const auto& e : table.entries) {
    if (e.df1 != df1 || e.df2 > df2) continue;
    if (!best || e.df2 > best->df2) best = &e;
  }
  if (!best)
    throw validation_error("F table: no entry for df1 = " +
                           std::to_string(df1) + ", df2 <= " +
                           csv::format_number(df2));
  return best->critical;
}

}  // namespace fleetcore::econ
