// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fleetcore/rounding.hpp"

namespace fleetcli {

// FNV-1a, 64 bit; stable across platforms, good enough to fingerprint inputs.
std::uint64_t fnv1a64(std::string_view data);

// "fnv1a64:" followed by 16 lowercase hex digits.
std::string digest_label(std::string_view data);

std::string basename(const std::string& path);

// Whole file as a string; any failure -> io_error naming the path.
std::string read_file(const std::string& path);

// Writes to <path>.tmp, then renames over path, so a failed run never leaves
// a partial report behind.
void write_file_atomic(const std::string& path, const std::string& content);

const char* to_string(fleetcore::rounding_mode mode);

// An input file plus the name and digest its metadata entry shows.
struct named_input {
  std::string name;
  std::string text;
  std::string digest;
};

named_input load_input(const std::string& path);

// '#' metadata lines prepended to CSV reports: tool version, rounding mode,
// one digest line per input.
std::string csv_metadata(fleetcore::rounding_mode mode,
                         const std::vector<named_input>& inputs);

// Bundled data file (registries, F table): looked up next to the executable
// under ../share/fleetcore or ./share/fleetcore.
std::string resource_path(const std::string& name);

}  // namespace fleetcli
