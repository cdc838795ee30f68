#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks of the installed CLI contract: flags, formats, exit
// codes, and byte-level determinism of CSV output.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(LLQ_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// value of a named column in the first data row of a CSV table
double csv_value(const std::string& csv, const std::string& column, int row = 0) {
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  std::vector<std::string> cols;
  std::istringstream hs(header);
  std::string tok;
  while (std::getline(hs, tok, ',')) cols.push_back(tok);
  std::string line;
  for (int i = 0; i <= row; ++i) REQUIRE(std::getline(in, line));
  std::istringstream ls(line);
  size_t idx = 0;
  while (std::getline(ls, tok, ',')) {
    if (cols.at(idx) == column) return std::stod(tok);
    ++idx;
  }
  FAIL("column not found: " << column);
  return 0.0;
}

} // namespace

TEST_CASE("spectrum: hydrogen ground state in eV") {
  RunResult r = run("spectrum --Z 1 --n-max 1 --units eV --format csv");
  CHECK(r.exit_code == 0);
  CHECK(csv_value(r.out, "E_closed_form") == doctest::Approx(-13.6057).epsilon(1e-3));
}

TEST_CASE("spectrum: finite-eps column tracks the closed form") {
  RunResult r = run("spectrum --Z 1 --n-max 1 --eps 1e-4 --format csv");
  CHECK(r.exit_code == 0);
  const double e0 = csv_value(r.out, "E_closed_form");
  const double fe = csv_value(r.out, "E_finite_eps");
  // the regulator shifts the level by about -m*eps in absolute terms
  CHECK(std::abs(fe - e0) <= 2e-4);
  CHECK(fe < e0);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("spectrum --n-max 0").exit_code == 2);
  CHECK(run("bogus-command").exit_code == 2);
  CHECK(run("scatter --V0 0.5").exit_code == 2); // neither --step nor --barrier
}

TEST_CASE("unwritable output path exits with code 3") {
  RunResult r = run("spectrum --n-max 1 --output /nonexistent-dir/out.csv");
  CHECK(r.exit_code == 3);
}

TEST_CASE("wavefunction JSON: d0, conventions block, theta=0 spinor") {
  RunResult r = run("wavefunction --state 1s --spin up --Z 1 --format json --theta 0");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["meta"]["d0"].get<double>() == doctest::Approx(0.98973).epsilon(1e-4));
  CHECK(j["conventions"].contains("norm_formula_over_computed"));
  CHECK(j["conventions"]["norm_formula_over_computed"].get<double>() ==
        doctest::Approx(2.0 * std::sqrt(M_PI)).epsilon(1e-12));
  // spinor components (1, 0, -i d0, 0) at theta = 0
  auto sp = j["meta"]["spinor_theta"];
  const double d0 = j["meta"]["d0"].get<double>();
  CHECK(sp[0][0].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sp[1][0].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sp[2][1].get<double>() == doctest::Approx(-d0).epsilon(1e-12));
  CHECK(sp[3][0].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(!j["rows"].empty());
}

TEST_CASE("scatter: step reflection against the closed form") {
  RunResult r = run("scatter --step --V0 0.5 --m 1 --E 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(csv_value(r.out, "R") == doctest::Approx(0.0294373).epsilon(1e-4));
  const double sum = csv_value(r.out, "R") + csv_value(r.out, "T");
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("CSV determinism: identical flags give byte-identical files") {
  const std::string p1 = "/tmp/llq_det_1.csv", p2 = "/tmp/llq_det_2.csv";
  CHECK(run("spectrum --Z 2 --n-max 2 --eps 1e-4 --output " + p1).exit_code == 0);
  CHECK(run("spectrum --Z 2 --n-max 2 --eps 1e-4 --output " + p2).exit_code == 0);
  const std::string a = slurp(p1), b = slurp(p2);
  CHECK(!a.empty());
  CHECK(a == b);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("verify suites pass with exit code 0") {
  CHECK(run("verify --suite algebra").exit_code == 0);
  CHECK(run("verify --suite commutators --eps 1e-3").exit_code == 0);
  CHECK(run("verify --suite oracle").exit_code == 0);
}

TEST_CASE("oracle-compare emits matched rows") {
  RunResult r = run("oracle-compare --Z 1 --n-max 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(csv_value(r.out, "rel_diff") <= 1e-6);
  CHECK(csv_value(r.out, "rel_diff", 2) <= 1e-6);
}

TEST_CASE("LL_ALPHA environment override") {
  RunResult r = run("spectrum --n-max 1 --format csv"); // physical alpha
  const double e_default = csv_value(r.out, "E_closed_form");
  const std::string cmd = "env LL_ALPHA=0.01 " + std::string(LLQ_BINARY) +
                          " spectrum --n-max 1 --format csv 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  const double e_env = csv_value(out, "E_closed_form");
  CHECK(e_env == doctest::Approx(-0.01 * 0.01 / 2.0).epsilon(1e-10));
  CHECK(e_env != e_default);
}
