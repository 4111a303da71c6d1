// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <string>

#include "fleetcore/econometrics.hpp"

namespace fleetcli {

// Parses the shared regression sample layout: enterprise_id (optional,
// ignored), x1..xk in order, y, weight (optional).
fleetcore::econ::sample parse_sample(const std::string& text,
                                     std::size_t* n_rows);

// Keeps only the requested factor (1-based) for single-factor forms.
fleetcore::econ::sample select_factor(const fleetcore::econ::sample& s,
                                      std::size_t x_col);

fleetcore::econ::regression_model fit_sample(const fleetcore::econ::sample& s,
                                             const std::string& form,
                                             std::size_t x_col,
                                             double t_value);

}  // namespace fleetcli
