// Exercises the installed command line surface: exit codes, output formats,
// and reproducibility.  The binary path comes in through MODREL_CLI_PATH.
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(MODREL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) {
    out.append(buf, n);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty()) {
      lines.push_back(line);
    }
  }
  return lines;
}

// Strips the trailing seconds field from a CSV row.
std::string drop_seconds(const std::string& row) {
  const auto pos = row.rfind(',');
  return row.substr(0, pos);
}

}  // namespace

TEST_CASE("list: all rows, stable across runs") {
  const CliResult a = run_cli("list");
  CHECK(a.exit_code == 0);
  const auto rows = lines_of(a.out);
  // one id line + one anchor line per catalog entry
  CHECK(rows.size() == 2 * 17);
  CHECK(a.out.find("I16b") != std::string::npos);
  const CliResult b = run_cli("list");
  CHECK(a.out == b.out);
}

TEST_CASE("check: pass, domain error, usage error exit codes") {
  const CliResult pass = run_cli("check --id I1 --alpha 2 --format json");
  CHECK(pass.exit_code == 0);
  const auto j = nlohmann::json::parse(pass.out);
  CHECK(j["pass"] == true);
  CHECK(j["id"] == "I1");
  CHECK(j["sides"].size() == 3);

  CHECK(run_cli("check --id I1 --alpha -1").exit_code == 2);
  CHECK(run_cli("check --id I1").exit_code == 64);         // missing param
  CHECK(run_cli("check --id I99 --alpha 1").exit_code == 64);  // unknown id
  CHECK(run_cli("check --id I1 --alpha 2 --format yaml").exit_code == 64);
}

TEST_CASE("check: vanishing log-integral case") {
  const CliResult r = run_cli("check --id I13 --a 0.1591549431 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["sides"][0]["value"].get<double>()) < 1e-9);
}

TEST_CASE("sweep: csv shape, pass column, exit codes") {
  const CliResult r =
      run_cli("sweep --id I1 --min 0.1 --max 10 --points 21 --log-spaced");
  CHECK(r.exit_code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 22);
  CHECK(rows[0] == "id,param,lhs,mid,rhs,max_abs_diff,tol,pass,terms,nodes,seconds");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].find(",true,") != std::string::npos);
  }

  const CliResult r5 = run_cli("sweep --id I5 --min 0.5 --max 20 --points 5");
  CHECK(r5.exit_code == 0);
  CHECK(lines_of(r5.out).size() == 6);

  CHECK(run_cli("sweep --id I1 --min 0.1 --max 10 --points 0").exit_code ==
        64);
  CHECK(run_cli("sweep --id I1 --min 10 --max 1 --points 5").exit_code == 64);
}

TEST_CASE("sweep: --out writes the file") {
  const std::string path = "/tmp/modrel_sweep_test.csv";
  std::remove(path.c_str());
  const CliResult r = run_cli(
      "sweep --id I5 --min 1 --max 20 --points 3 --out " + path);
  CHECK(r.exit_code == 0);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[256];
  REQUIRE(std::fgets(buf, sizeof(buf), f) != nullptr);
  CHECK(std::string(buf).rfind("id,param,", 0) == 0);
  std::fclose(f);
  std::remove(path.c_str());
}

TEST_CASE("sweep: json format emits a parsable array") {
  const CliResult r =
      run_cli("sweep --id I13 --min 0.5 --max 2 --points 3 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  for (const auto& rep : j) {
    CHECK(rep["pass"] == true);
    CHECK(rep["id"] == "I13");
  }
}

TEST_CASE("check: --out writes the report to a file") {
  const std::string path = "/tmp/modrel_check_test.json";
  std::remove(path.c_str());
  const CliResult r =
      run_cli("check --id I14 --format json --out " + path);
  CHECK(r.exit_code == 0);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  const std::size_t n = std::fread(buf, 1, sizeof(buf), f);
  std::fclose(f);
  std::remove(path.c_str());
  const auto j = nlohmann::json::parse(std::string(buf, n));
  CHECK(j["id"] == "I14");
  CHECK(j["pass"] == true);
}

TEST_CASE("check is numerically reproducible run to run") {
  const std::string args = "check --id I12 --n 0.25 --format csv";
  const auto a = lines_of(run_cli(args).out);
  const auto b = lines_of(run_cli(args).out);
  REQUIRE(a.size() == 2);
  REQUIRE(b.size() == 2);
  CHECK(drop_seconds(a[1]) == drop_seconds(b[1]));
}

TEST_CASE("selftest passes, also under a loosened tolerance") {
  const CliResult strict = run_cli("selftest");
  CHECK(strict.exit_code == 0);
  CHECK(strict.out.find("ALL PASS") != std::string::npos);
  CHECK(strict.out.find("FAIL\n") == std::string::npos);
  CHECK(strict.out.find("drift -gamma confirmed: PASS") != std::string::npos);

  const CliResult loose = run_cli("selftest --tol 1e-4");
  CHECK(loose.exit_code == 0);
  CHECK(loose.out.find("ALL PASS") != std::string::npos);

  // Numeric output is identical run to run (timings aside).
  const CliResult again = run_cli("selftest");
  const auto a = lines_of(strict.out);
  const auto b = lines_of(again.out);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string x = a[i];
    std::string y = b[i];
    const auto cut_timing = [](std::string& s) {
      const auto pos = s.find_last_of(' ');
      if (pos != std::string::npos && s.find("PASS") != std::string::npos) {
        s.resize(pos);
      }
    };
    cut_timing(x);
    cut_timing(y);
    CHECK(x == y);
  }
}
