#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#ifndef IZETA_CLI_PATH
#error "IZETA_CLI_PATH must point at the built izeta binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(IZETA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.output += buf;
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

} // namespace

TEST_CASE("eval prints the value and exits 0") {
  const RunResult r = run_cli("eval --mode zeta --s 2 --x 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1.64493406") != std::string::npos);
}

TEST_CASE("eval frac mode matches the closed form") {
  const RunResult r = run_cli("eval --mode frac --s 1 --x -1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.31326168") != std::string::npos);
}

TEST_CASE("eval accepts complex s syntax") {
  const RunResult r = run_cli("eval --mode eta --s 0.5+5i --x 0");
  CHECK(r.exit_code == 0);
}

TEST_CASE("prefactor pole maps to exit 2") {
  const RunResult r = run_cli("eval --mode zeta --s 1 --x 0");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("pole") != std::string::npos);
}

TEST_CASE("domain violation maps to exit 2") {
  CHECK(run_cli("eval --mode eta --s 2 --x -1").exit_code == 2);
  CHECK(run_cli("eval --mode frac --s 2 --x 1").exit_code == 2);
  CHECK(run_cli("eval --mode nosuch --s 2 --x 0").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("table emits a CSV grid") {
  const RunResult r = run_cli("table --mode zeta --re-s 2:4:1 --im-s 0 --x 0");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 4);  // header + 3 rows
  CHECK(r.output.rfind("re_s,im_s,x,re_val,im_val,err_est,n_evals,status", 0) == 0);
}

TEST_CASE("table rows crossing s = 1 carry the pole status") {
  const RunResult r = run_cli("table --mode zeta --re-s 1:2:1 --im-s 0 --x 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find(",pole") != std::string::npos);
  CHECK(r.output.find(",ok") != std::string::npos);
}

TEST_CASE("table json output parses") {
  const RunResult r = run_cli("table --mode eta --re-s 2 --im-s 0 --x 0:1:0.5 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json arr = nlohmann::json::parse(r.output);
  REQUIRE(arr.size() == 3);
  CHECK(arr[0]["status"] == "ok");
  CHECK(arr[0]["re_val"].is_number());
}

TEST_CASE("table --out writes the file and unwritable paths exit 4") {
  const std::string path = "/tmp/izeta_cli_test_table.csv";
  std::remove(path.c_str());
  const RunResult r = run_cli("table --mode zeta --re-s 2 --im-s 0 --x 0 --out " + path);
  CHECK(r.exit_code == 0);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::fclose(f);
  std::remove(path.c_str());

  CHECK(run_cli("table --mode zeta --re-s 2 --im-s 0 --x 0 --out /nonexistent-dir/t.csv")
            .exit_code == 4);
}

TEST_CASE("verify norm passes") {
  const RunResult r = run_cli("verify norm");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS norm_X1") != std::string::npos);
  CHECK(r.output.find("0 failed") != std::string::npos);
}

TEST_CASE("verify semigroup reports one line per grid point") {
  const RunResult r = run_cli("verify semigroup");
  CHECK(r.exit_code == 0);
  std::size_t n = 0;
  for (std::size_t p = r.output.find("PASS semigroup"); p != std::string::npos;
       p = r.output.find("PASS semigroup", p + 1))
    ++n;
  CHECK(n == 9);  // 3 (alpha, beta) pairs x 3 x values
}

TEST_CASE("verify rejects unknown suites") {
  CHECK(run_cli("verify nosuchsuite").exit_code == 2);
}

TEST_CASE("zero-scan usage errors") {
  CHECK(run_cli("zero-scan --t-min 14 --t-max 14 --step 0.01").exit_code == 2);
  CHECK(run_cli("zero-scan --t-min 14 --t-max 14.3 --step -1").exit_code == 2);
}

TEST_CASE("zero-scan finds no zero-level minima on a quiet stretch") {
  const RunResult r = run_cli("zero-scan --t-min 2 --t-max 3 --step 0.1");
  CHECK(r.exit_code == 0);
}

TEST_CASE("symmetry-scan of a point against itself is tiny") {
  const RunResult r = run_cli("symmetry-scan --s1 2 --s2 2 --x -2:0:1");
  CHECK(r.exit_code == 0);
  const std::size_t eq = r.output.find("= ");
  REQUIRE(eq != std::string::npos);
  CHECK(std::strtod(r.output.c_str() + eq + 2, nullptr) < 1e-12);
}

TEST_CASE("version flag") {
  const RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("izeta") != std::string::npos);
}
