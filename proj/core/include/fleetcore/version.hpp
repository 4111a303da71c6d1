// SPDX-License-Identifier: MIT
#pragma once

#include <string_view>

namespace fleetcore {

inline constexpr std::string_view version = "0.1.0";

}  // namespace fleetcore
