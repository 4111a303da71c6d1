// SPDX-License-Identifier: MIT
#pragma once

// Brute-force least-squares oracles. The normal equations are written out on
// raw moments and solved by Cramer's rule with explicit determinants, sharing
// no code path with the production solver (which centers, pivots and
// eliminates). Deviations between the two are evidence of a defect, not of a
// convention mismatch.

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

namespace fleetcli::oracle {

struct dataset {
  std::vector<std::vector<double>> x;  // x[j][i]
  std::vector<double> y;
  std::vector<double> w;  // empty = unit weights
  std::vector<double> truth;  // generating coefficients, intercept first

  double weight(std::size_t i) const { return w.empty() ? 1.0 : w[i]; }
};

inline double det2(double a, double b, double c, double d) {
  return a * d - b * c;
}

inline double det3(const double m[3][3]) {
  return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
         m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
         m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

inline double det4(const double m[4][4]) {
  double sum = 0;
  for (int col = 0; col < 4; ++col) {
    double minor[3][3];
    for (int i = 1; i < 4; ++i) {
      int mc = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == col) continue;
        minor[i - 1][mc++] = m[i][j];
      }
    }
    const double term = m[0][col] * det3(minor);
    sum += (col % 2 == 0) ? term : -term;
  }
  return sum;
}

// y = a + b x by Cramer on the 2x2 weighted normal system.
inline std::vector<double> fit_line(const dataset& d) {
  double s0 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
  for (std::size_t i = 0; i < d.y.size(); ++i) {
    const double w = d.weight(i), x = d.x[0][i], y = d.y[i];
    s0 += w;
    sx += w * x;
    sxx += w * x * x;
    sy += w * y;
    sxy += w * x * y;
  }
  const double det = det2(s0, sx, sx, sxx);
  if (det == 0) throw std::runtime_error("oracle: singular line system");
  return {det2(sy, sx, sxy, sxx) / det, det2(s0, sy, sx, sxy) / det};
}

// y = a + b x + c x^2 by Cramer on raw powers up to x^4.
inline std::vector<double> fit_parabola(const dataset& d) {
  double s[5] = {0, 0, 0, 0, 0};
  double t[3] = {0, 0, 0};
  for (std::size_t i = 0; i < d.y.size(); ++i) {
    const double w = d.weight(i), x = d.x[0][i], y = d.y[i];
    double p = 1;
    for (int k = 0; k <= 4; ++k) {
      s[k] += w * p;
      if (k <= 2) t[k] += w * p * y;
      p *= x;
    }
  }
  const double m[3][3] = {{s[0], s[1], s[2]},
                          {s[1], s[2], s[3]},
                          {s[2], s[3], s[4]}};
  const double det = det3(m);
  if (det == 0) throw std::runtime_error("oracle: singular parabola system");
  std::vector<double> coef(3);
  for (int col = 0; col < 3; ++col) {
    double rep[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rep[i][j] = (j == col) ? t[i] : m[i][j];
    coef[col] = det3(rep) / det;
  }
  return coef;
}

// y = a + b1 x1 + b2 x2 + b3 x3 by Cramer on the 4x4 weighted normal system.
inline std::vector<double> fit_plane3(const dataset& d) {
  double m[4][4] = {};
  double r[4] = {};
  for (std::size_t i = 0; i < d.y.size(); ++i) {
    const double w = d.weight(i);
    const double phi[4] = {1.0, d.x[0][i], d.x[1][i], d.x[2][i]};
    for (int a = 0; a < 4; ++a) {
      r[a] += w * phi[a] * d.y[i];
      for (int b = 0; b < 4; ++b) m[a][b] += w * phi[a] * phi[b];
    }
  }
  const double det = det4(m);
  if (det == 0) throw std::runtime_error("oracle: singular plane system");
  std::vector<double> coef(4);
  for (int col = 0; col < 4; ++col) {
    double rep[4][4];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) rep[i][j] = (j == col) ? r[i] : m[i][j];
    coef[col] = det4(rep) / det;
  }
  return coef;
}

// Random regression datasets with well-conditioned factor ranges. Every third
// dataset carries small integer weights to exercise the grouped-data path.
inline dataset make_dataset(std::mt19937_64& rng, std::size_t factors,
                            bool quadratic, std::size_t index) {
  std::uniform_int_distribution<std::size_t> n_dist(12, 40);
  std::uniform_real_distribution<double> x_dist(0.2, 2.2);
  std::uniform_real_distribution<double> mag_dist(0.3, 3.0);
  std::uniform_real_distribution<double> sd_dist(0.05, 0.5);
  std::bernoulli_distribution sign_dist(0.5);

  const std::size_t n = n_dist(rng);
  const std::size_t terms = quadratic ? 3 : factors + 1;
  dataset d;
  d.x.resize(factors);
  for (std::size_t k = 0; k < terms; ++k) {
    const double mag = mag_dist(rng);
    d.truth.push_back(sign_dist(rng) ? mag : -mag);
  }
  const double sd = sd_dist(rng);
  std::normal_distribution<double> noise(0.0, sd);
  const bool weighted = index % 3 == 2;
  std::uniform_int_distribution<int> w_dist(1, 4);
  for (std::size_t i = 0; i < n; ++i) {
    double y = d.truth[0];
    for (std::size_t j = 0; j < factors; ++j) {
      const double x = x_dist(rng);
      d.x[j].push_back(x);
      y += d.truth[j + 1] * x;
      if (quadratic) y += d.truth[2] * x * x;
    }
    d.y.push_back(y + noise(rng));
    if (weighted) d.w.push_back(static_cast<double>(w_dist(rng)));
  }
  return d;
}

}  // namespace fleetcli::oracle
