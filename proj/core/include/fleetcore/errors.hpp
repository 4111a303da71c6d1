// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace fleetcore {

// Error taxonomy mirrored by the CLI exit codes:
// validation -> 2, I/O -> 3, numeric -> 4.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Malformed input, violated invariants, degenerate values.
class validation_error : public error {
 public:
  using error::error;
};

// Missing or unreadable files, failed writes.
class io_error : public error {
 public:
  using error::error;
};

// Singular systems, zero-variance statistics, undefined fits.
class numeric_error : public error {
 public:
  using error::error;
};

}  // namespace fleetcore
