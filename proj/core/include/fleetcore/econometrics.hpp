// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace fleetcore::econ {

// Observations of up to a few factors x and a response y, column-major.
// Optional weights support grouped data (each row a group mean weighted by
// its count); empty weights mean 1 per row.
struct sample {
  std::vector<std::vector<double>> x;  // x[j][i]: factor j, observation i
  std::vector<double> y;
  std::vector<double> w;

  std::size_t size() const { return y.size(); }
  std::size_t factors() const { return x.size(); }
  double weight(std::size_t i) const { return w.empty() ? 1.0 : w[i]; }
  double total_weight() const;
};

void validate(const sample& s);  // consistent lengths, finite values

enum class model_form { linear, parabola, multilinear };

const char* to_string(model_form form);

// A fitted least-squares model with its diagnostics. Slope-indexed vectors
// (errors, bounds, elasticity) exclude the intercept; for the parabola they
// cover b and c, and elasticity is the single value (b + 2c*mean_x)*mean_x/mean_y.
struct regression_model {
  model_form form = model_form::linear;
  std::vector<double> coef;  // a, b | a, b, c | a, b1..bk
  std::vector<double> slope_std_error;
  std::vector<double> marginal_error;   // t_value * std_error
  std::vector<double> confidence_low;   // coef - marginal_error
  std::vector<double> confidence_high;  // coef + marginal_error
  double pearson = 0;  // linear fits only, else NaN
  double eta = 0;      // correlation ratio sqrt(1 - SSE/SST)
  double determination = 0;  // eta squared
  double f_statistic = 0;
  bool f_finite = true;  // false on a perfect fit
  std::vector<double> elasticity;
  double t_value = 2.0;
  double n_eff = 0;  // total weight used in the degrees of freedom
  std::vector<double> mean_x;
  double mean_y = 0;
};

// Straight line y = a + bx on factor 0. Requires n >= 3 and positive
// x-variance (else numeric_error: the normal system is singular).
regression_model fit_linear(const sample& s, double t_value = 2.0);

// Parabola y = a + bx + cx^2 on factor 0, n >= 4. x is centered about its
// mean internally for conditioning; reported coefficients are in the raw
// basis.
regression_model fit_parabola(const sample& s, double t_value = 2.0);

// Plane y = a + b1 x1 + ... + bk xk over all factors, n >= k + 2.
// Collinear factors raise numeric_error naming the offending column.
regression_model fit_multilinear(const sample& s, double t_value = 2.0);

// Model value at a point (x.size() = factors; parabola and linear use x[0]).
double predict(const regression_model& m, const std::vector<double>& x);
double predict1(const regression_model& m, double x);

// Moment-form linear correlation with population (divide-by-n) variance:
//   r = (mean(xy) - mean(x) mean(y)) / (sigma_x sigma_y)
// Zero variance -> numeric_error. The sample-variance alternative is
// (n/(n-1))-invariant here since it cancels in the ratio; population moments
// are used throughout for consistency with the correlation ratio.
double pearson_r(const std::vector<double>& xs, const std::vector<double>& ys);
double pearson_r(const std::vector<double>& xs, const std::vector<double>& ys,
                 const std::vector<double>& w);

// eta = sqrt(1 - SSE/SST) of a fitted model over its sample; equals |r| for
// linear fits, exceeds it when a curve captures more variance.
double correlation_ratio(const sample& s, const regression_model& m);

// F = (R^2 / k) / ((1 - R^2) / (n - k - 1)). R^2 = 1 -> +infinity.
double f_statistic(double determination, double n, double k);

// (coefficient - marginal_error, coefficient + marginal_error)
std::pair<double, double> slope_confidence(double coefficient,
                                           double marginal_error);

// Percent response of y to a 1 percent move of each factor at the means:
// E_j = b_j * mean_x_j / mean_y; parabola: (b + 2c*mean_x) * mean_x / mean_y.
std::vector<double> elasticity(const regression_model& m,
                               const std::vector<double>& mean_x,
                               double mean_y);

// First-order change of y for a move of dx in each factor, evaluated at
// at_x (parabola slope depends on the point; default is the sample mean).
std::vector<double> marginal_effect(const regression_model& m, double dx);
std::vector<double> marginal_effect(const regression_model& m, double dx,
                                    double at_x);

// Stationary point -b / (2c) of a fitted parabola; c == 0 -> numeric_error.
double parabola_extremum(const regression_model& m);

// Symmetric matrix of pairwise population correlations with unit diagonal.
// Cells touching a zero-variance column are NaN markers.
std::vector<std::vector<double>> correlation_matrix(
    const std::vector<std::vector<double>>& columns);

// How far each factor can realistically be lifted, and what that buys in y.
//   minimal: lift below-mean units to the mean; averaged over everyone the
//            factor gains share_below * (mean - mean_below).
//   optimal: lift everyone to the progressive mean (mean of the above-mean
//            units).
//   maximal: lift everyone to the observed maximum.
// delta_y_j = b_j * delta_x_j through the fitted slopes.
enum class reserve_mode { minimal, optimal, maximal };

const char* to_string(reserve_mode mode);

struct reserve_row {
  std::size_t factor = 0;
  double delta_x = 0;
  double delta_y = 0;
};

struct reserve_report {
  reserve_mode mode = reserve_mode::optimal;
  std::vector<reserve_row> rows;
  double total_delta_y = 0;
  double percent_of_mean = 0;  // 100 * total / mean_y
};

reserve_report reserve_estimate(const sample& s, const regression_model& m,
                                reserve_mode mode);

// Actual over model-predicted y at the unit's factor levels; above 1 means
// the unit outperforms the fitted relationship. Non-positive prediction ->
// no score.
std::optional<double> enterprise_efficiency(const regression_model& m,
                                            const std::vector<double>& x,
                                            double y_actual);

// Critical F values at alpha = 0.05, shipped as a resource file
// (CSV: df1,df2,critical), never hard-coded in logic.
struct f_table {
  struct entry {
    int df1 = 0;
    int df2 = 0;
    double critical = 0;
  };
  std::vector<entry> entries;
};

f_table parse_f_table(std::istream& in);

// Largest tabulated df2 not exceeding the requested one (conservative for
// untabulated intermediate values). Unknown df1 -> validation_error.
double f_critical(const f_table& table, int df1, double df2);

}  // namespace fleetcore::econ
