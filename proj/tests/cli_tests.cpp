// SPDX-License-Identifier: MIT
// End-to-end checks of the installed command-line surface: exit codes,
// deterministic bytes and the no-partial-output rule. FLEETCLI_PATH is
// injected by the build as the absolute path of the freshly built binary.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace fs = std::filesystem;

namespace {

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "fleetcli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

int run_cli(const std::string& args, const fs::path& out = {},
            const fs::path& err = {}) {
  std::string cmd = std::string("'") + FLEETCLI_PATH + "' " + args;
  cmd += out.empty() ? " >/dev/null" : " >" + quoted(out);
  cmd += err.empty() ? " 2>/dev/null" : " 2>" + quoted(err);
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

fs::path reference_scenario() {
  const fs::path p = work_dir() / "scenario.json";
  spit(p,
       "{\n"
       "  \"initial_value\": 25000,\n"
       "  \"base_rate\": 0.24,\n"
       "  \"acceleration\": 2,\n"
       "  \"annual_mileage\": [70000, 66000, 61000, 56000, 50000, 42000],\n"
       "  \"discount_rate\": 0.15\n"
       "}\n");
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("depreciation schedule prints the reference totals") {
  const fs::path sched = work_dir() / "sched.csv";
  const int rc = run_cli("depr --scenario " + quoted(reference_scenario()) +
                         " --method degressive --round paper --output " +
                         quoted(sched));
  CHECK(rc == 0);
  const std::string text = slurp(sched);
  CHECK(text.find("21441.48") != std::string::npos);
  CHECK(text.find("15789.58") != std::string::npos);
  CHECK(text.find("total,345000,21441.48,3558.52,,15789.58") !=
        std::string::npos);
}

TEST_CASE("reruns produce byte-identical files") {
  const fs::path a = work_dir() / "run_a.csv";
  const fs::path b = work_dir() / "run_b.csv";
  const std::string base = "depr --scenario " + quoted(reference_scenario()) +
                           " --method degressive --round paper --output ";
  REQUIRE(run_cli(base + quoted(a)) == 0);
  REQUIRE(run_cli(base + quoted(b)) == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("a missing input exits 3 and writes nothing") {
  const fs::path out = work_dir() / "never.csv";
  const int rc = run_cli("depr --scenario " +
                         quoted(work_dir() / "no-such-file.json") +
                         " --output " + quoted(out));
  CHECK(rc == 3);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("invalid scenario values exit 2 and write nothing") {
  const fs::path bad = work_dir() / "bad_scenario.json";
  spit(bad,
       "{\"initial_value\": 25000, \"base_rate\": 0.24,"
       " \"acceleration\": 0.5, \"annual_mileage\": [1000]}\n");
  const fs::path out = work_dir() / "never2.csv";
  const fs::path err = work_dir() / "bad_scenario.err";
  const int rc =
      run_cli("depr --scenario " + quoted(bad) + " --output " + quoted(out),
              {}, err);
  CHECK(rc == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(slurp(err).find("error:") != std::string::npos);
}

TEST_CASE("unknown flags are a usage error") {
  CHECK(run_cli("depr --scenario x.json --frobnicate") == 2);
  CHECK(run_cli("--help") == 0);
  const fs::path out = work_dir() / "version.txt";
  CHECK(run_cli("--version", out) == 0);
  CHECK(slurp(out).find("0.1.0") != std::string::npos);
}

TEST_CASE("a collinear design exits 4 with a named column") {
  const fs::path sample = work_dir() / "collinear.csv";
  spit(sample,
       "enterprise_id,x1,x2,y\n"
       "a,1,2,1.1\n"
       "b,2,4,2.2\n"
       "c,3,6,2.9\n"
       "d,4,8,4.2\n"
       "e,5,10,4.8\n");
  const fs::path out = work_dir() / "model.json";
  const fs::path err = work_dir() / "collinear.err";
  const int rc = run_cli("fit --form multilinear --input " + quoted(sample) +
                             " --output " + quoted(out),
                         {}, err);
  CHECK(rc == 4);
  CHECK_FALSE(fs::exists(out));
  CHECK(slurp(err).find("column x") != std::string::npos);
}

TEST_CASE("the embedded self-test reports its one known failure") {
  const fs::path out = work_dir() / "golden.txt";
  const int rc = run_cli("golden", out);
  CHECK(rc == 1);
  const std::string text = slurp(out);
  std::size_t fails = 0;
  std::istringstream lines(text);
  std::string line, failing;
  while (std::getline(lines, line))
    if (line.rfind("FAIL ", 0) == 0) {
      ++fails;
      failing = line;
    }
  CHECK(fails == 1);
  CHECK(failing.find("c01.mean-liquidation") != std::string::npos);
}

TEST_SUITE_END();
