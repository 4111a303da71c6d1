// SPDX-License-Identifier: MIT
#include "fleetcore/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>

#include "fleetcore/errors.hpp"

namespace fleetcore::csv {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

table read(std::istream& in) {
  table t;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (first && line.size() >= 3 && line[0] == '\xEF' && line[1] == '\xBB' &&
        line[2] == '\xBF') {
      line.erase(0, 3);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (first) {
      t.header = split_line(line);
      first = false;
      continue;
    }
    t.rows.push_back(split_line(line));
    t.line_numbers.push_back(line_no);
  }
  if (first) throw validation_error("empty input: header row is mandatory");
  return t;
}

double to_number(const std::string& field, std::size_t line) {
  if (field.empty())
    throw validation_error("line " + std::to_string(line) + ": empty numeric field");
  const char* begin = field.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end != begin + field.size())
    throw validation_error("line " + std::to_string(line) + ": not a number: '" +
                           field + "'");
  return value;
}

long to_integer(const std::string& field, std::size_t line) {
  if (field.empty())
    throw validation_error("line " + std::to_string(line) + ": empty integer field");
  const char* begin = field.c_str();
  char* end = nullptr;
  long value = std::strtol(begin, &end, 10);
  if (end != begin + field.size())
    throw validation_error("line " + std::to_string(line) +
                           ": not an integer: '" + field + "'");
  return value;
}

std::string format_number(double value) {
  char buf[40];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

std::string format_fixed(double value, int decimals) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

}  // namespace fleetcore::csv
