#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <izeta/grid.hpp>

using izeta::EvalConfig;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

} // namespace

TEST_CASE("axis and grid bookkeeping") {
  izeta::AxisSpec ax{0.0, 1.0, 0.25};
  CHECK(ax.count() == 5);
  CHECK(ax.value(4) == doctest::Approx(1.0));
  izeta::AxisSpec single{2.0, 2.0, 1.0};
  CHECK(single.count() == 1);
  CHECK_THROWS_AS((izeta::AxisSpec{1.0, 0.0, 0.5}.validate()), std::domain_error);
  CHECK_THROWS_AS((izeta::AxisSpec{0.0, 1.0, 0.0}.validate()), std::domain_error);

  CHECK(izeta::parse_mode("eta") == izeta::EvalMode::Eta);
  CHECK(izeta::parse_mode("frac") == izeta::EvalMode::Frac);
  CHECK_THROWS_AS(izeta::parse_mode("theta"), std::domain_error);
}

TEST_CASE("sweep is lexicographic and row counts multiply") {
  EvalConfig cfg;
  izeta::GridSpec grid;
  grid.re_s = {2.0, 3.0, 1.0};
  grid.im_s = {0.0, 1.0, 1.0};
  grid.x = {0.0, 1.0, 0.5};
  const auto rows = izeta::sweep_table(grid, izeta::EvalMode::Eta, cfg);
  REQUIRE(rows.size() == 2 * 2 * 3);
  CHECK(rows[0].re_s == 2.0);
  CHECK(rows[0].im_s == 0.0);
  CHECK(rows[0].x == 0.0);
  CHECK(rows[1].x == 0.5);           // x fastest
  CHECK(rows[3].im_s == 1.0);        // then im
  CHECK(rows[6].re_s == 3.0);        // then re
  for (const auto& r : rows) CHECK(r.status == "ok");
}

TEST_CASE("CSV header, pole rows, and determinism") {
  EvalConfig cfg;
  izeta::GridSpec grid;
  grid.re_s = {1.0, 2.0, 1.0};  // includes the s = 1 pole of the zeta prefactor
  grid.im_s = {0.0, 0.0, 1.0};
  grid.x = {0.0, 0.0, 1.0};
  const auto rows = izeta::sweep_table(grid, izeta::EvalMode::Zeta, cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].status == "pole");
  CHECK(rows[1].status == "ok");

  std::ostringstream os1, os2;
  izeta::write_csv(rows, os1);
  izeta::write_csv(izeta::sweep_table(grid, izeta::EvalMode::Zeta, cfg), os2);
  CHECK(os1.str() == os2.str());  // identical invocations, identical bytes

  const auto lines = split_lines(os1.str());
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "re_s,im_s,x,re_val,im_val,err_est,n_evals,status");
  const auto pole_fields = split_fields(lines[1]);
  REQUIRE(pole_fields.size() == 8);
  CHECK(pole_fields[3].empty());
  CHECK(pole_fields[7] == "pole");
  const auto ok_fields = split_fields(lines[2]);
  CHECK(ok_fields[7] == "ok");
}

TEST_CASE("CSV value fields round-trip bit-for-bit") {
  EvalConfig cfg;
  izeta::GridSpec grid;
  grid.re_s = {0.3, 0.5, 0.2};
  grid.im_s = {0.0, 1.0, 1.0};
  grid.x = {0.0, 1.0, 0.5};
  const auto rows = izeta::sweep_table(grid, izeta::EvalMode::Eta, cfg);
  std::ostringstream os;
  izeta::write_csv(rows, os);
  const auto lines = split_lines(os.str());
  REQUIRE(lines.size() == rows.size() + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto f = split_fields(lines[i + 1]);
    REQUIRE(f.size() == 8);
    CHECK(std::strtod(f[0].c_str(), nullptr) == rows[i].re_s);
    CHECK(std::strtod(f[1].c_str(), nullptr) == rows[i].im_s);
    CHECK(std::strtod(f[2].c_str(), nullptr) == rows[i].x);
    CHECK(std::strtod(f[3].c_str(), nullptr) == rows[i].value.real());
    CHECK(std::strtod(f[4].c_str(), nullptr) == rows[i].value.imag());
    CHECK(std::strtod(f[5].c_str(), nullptr) == rows[i].err_est);
  }
}

TEST_CASE("fmt17 round-trips awkward doubles") {
  for (double v : {M_PI, 1.0 / 3.0, 1e-300, -2.2250738585072014e-308, 0.1, 123456789.123456789}) {
    const std::string s = izeta::fmt17(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("JSON mirrors the CSV rows") {
  EvalConfig cfg;
  izeta::GridSpec grid;
  grid.re_s = {1.0, 2.0, 1.0};
  grid.im_s = {0.0, 0.0, 1.0};
  grid.x = {0.0, 0.0, 1.0};
  const auto rows = izeta::sweep_table(grid, izeta::EvalMode::Zeta, cfg);
  const nlohmann::json arr = izeta::rows_to_json(rows);
  REQUIRE(arr.size() == rows.size());
  CHECK(arr[0]["status"] == "pole");
  CHECK(arr[0]["re_val"].is_null());
  CHECK(arr[1]["status"] == "ok");
  CHECK(arr[1]["re_val"].get<double>() == rows[1].value.real());
  CHECK(arr[1]["n_evals"].get<std::int64_t>() == rows[1].n_evals);

  // serialized form parses back to the same document
  std::ostringstream os;
  izeta::write_json(rows, os);
  CHECK(nlohmann::json::parse(os.str()) == arr);
}

TEST_CASE("frac mode flips the x domain") {
  EvalConfig cfg;
  const auto ok = izeta::eval_table_point(izeta::EvalMode::Frac, {2.0, 0.0}, -1.0, cfg);
  CHECK(ok.status == "ok");
  const auto etarow = izeta::eval_table_point(izeta::EvalMode::Eta, {2.0, 0.0}, 1.0, cfg);
  CHECK(etarow.status == "ok");
  CHECK(ok.value.real() == etarow.value.real());
  const auto bad = izeta::eval_table_point(izeta::EvalMode::Frac, {2.0, 0.0}, 1.0, cfg);
  CHECK(bad.status == "domain");
}
