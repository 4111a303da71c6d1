// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace fleetcore::csv {

// Comma-delimited, UTF-8, '.' decimal point, no quoting, no thousands
// separators. Header row mandatory. Lines starting with '#' and blank lines
// are skipped; a leading UTF-8 BOM and trailing '\r' are stripped.
struct table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based source line of each row
};

table read(std::istream& in);

std::vector<std::string> split_line(const std::string& line);

// Field parsers; throw validation_error naming the 1-based source line.
double to_number(const std::string& field, std::size_t line);
long to_integer(const std::string& field, std::size_t line);

// Shortest decimal form that parses back to the identical double.
std::string format_number(double value);
// Fixed decimal places, deterministic across runs.
std::string format_fixed(double value, int decimals);

}  // namespace fleetcore::csv
