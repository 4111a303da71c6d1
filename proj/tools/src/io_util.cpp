// SPDX-License-Identifier: MIT
#include "io_util.hpp"

#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <sys/stat.h>

#include "fleetcore/errors.hpp"
#include "fleetcore/version.hpp"

namespace fleetcli {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string digest_label(std::string_view data) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

std::string basename(const std::string& path) {
  const auto pos = path.find_last_of('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw fleetcore::io_error("cannot open " + path + ": " +
                              std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw fleetcore::io_error("cannot read " + path);
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw fleetcore::io_error("cannot open " + tmp + " for writing: " +
                                std::strerror(errno));
    out << content;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw fleetcore::io_error("cannot write " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    const int err = errno;
    std::remove(tmp.c_str());
    throw fleetcore::io_error("cannot move " + tmp + " to " + path + ": " +
                              std::strerror(err));
  }
}

const char* to_string(fleetcore::rounding_mode mode) {
  return mode == fleetcore::rounding_mode::paper ? "paper" : "exact";
}

named_input load_input(const std::string& path) {
  named_input in;
  in.name = basename(path);
  in.text = read_file(path);
  in.digest = digest_label(in.text);
  return in;
}

std::string csv_metadata(fleetcore::rounding_mode mode,
                         const std::vector<named_input>& inputs) {
  std::string meta = "# fleetcli ";
  meta += fleetcore::version;
  meta += "\n# rounding: ";
  meta += to_string(mode);
  meta += "\n";
  for (const auto& in : inputs)
    meta += "# input " + in.name + ": " + in.digest + "\n";
  return meta;
}

namespace {

std::string exe_dir() {
  char buf[4096];
  const ssize_t n = ::readlink("/proc/self/exe", buf, sizeof buf - 1);
  if (n <= 0) return ".";
  buf[n] = '\0';
  std::string path(buf);
  const auto pos = path.find_last_of('/');
  return pos == std::string::npos ? "." : path.substr(0, pos);
}

bool file_exists(const std::string& path) {
  struct stat st{};
  return ::stat(path.c_str(), &st) == 0 && S_ISREG(st.st_mode);
}

}  // namespace

std::string resource_path(const std::string& name) {
  const std::string dir = exe_dir();
  const std::string candidates[] = {
      dir + "/../share/fleetcore/" + name,
      dir + "/share/fleetcore/" + name,
  };
  for (const auto& c : candidates)
    if (file_exists(c)) return c;
  throw fleetcore::io_error("bundled data file " + name +
                            " not found near " + dir);
}

}  // namespace fleetcli
