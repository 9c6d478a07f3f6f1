// izeta: evaluate incomplete eta/zeta functions and the fractional-integral
// form, sweep grids to CSV/JSON, and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain/pole error,
// 3 non-convergence, 4 I/O error.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <izeta/izeta.hpp>

namespace {

constexpr const char* kVersion = "izeta 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitIo = 4;

// Parse "a", "a+bi", "a-bi", "bi" into a complex number.
izeta::Complex parse_complex(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::domain_error("empty complex literal");

  // pure imaginary or pure real
  const bool has_i = t.back() == 'i' || t.back() == 'I';
  // split at the last +/- that is not part of an exponent and not leading
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }

  auto to_double = [](const std::string& str) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(str, &pos);
    } catch (const std::exception&) {
      throw std::domain_error("bad numeric literal '" + str + "'");
    }
    if (pos != str.size()) throw std::domain_error("bad numeric literal '" + str + "'");
    return v;
  };

  if (!has_i) {
    return {to_double(t), 0.0};
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    re_part = "0";
    im_part = t.substr(0, t.size() - 1);
  } else {
    re_part = t.substr(0, split);
    im_part = t.substr(split, t.size() - split - 1);
  }
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return {to_double(re_part), to_double(im_part)};
}

// Parse "start:stop:step" or a single value into an axis.
izeta::AxisSpec parse_axis(const std::string& text) {
  izeta::AxisSpec ax;
  const std::size_t c1 = text.find(':');
  if (c1 == std::string::npos) {
    ax.start = ax.stop = std::stod(text);
    ax.step = 1.0;
    return ax;
  }
  const std::size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw std::domain_error("axis must be a value or start:stop:step");
  }
  ax.start = std::stod(text.substr(0, c1));
  ax.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  ax.step = std::stod(text.substr(c2 + 1));
  ax.validate();
  return ax;
}

void print_reports(const std::vector<izeta::CheckReport>& reports, std::size_t& failures) {
  for (const izeta::CheckReport& r : reports) {
    if (r.status != "ok") {
      std::printf("SKIP %-15s s=(%g,%g) x=%-6g [%s]\n", r.check_name.c_str(), r.s.real(),
                  r.s.imag(), r.x, r.status.c_str());
      continue;
    }
    std::printf("%s %-15s s=(%g,%g) x=%-6g residual=%.3e tol=%.3e\n",
                r.passed ? "PASS" : "FAIL", r.check_name.c_str(), r.s.real(), r.s.imag(), r.x,
                r.residual, r.tolerance);
    if (!r.passed) ++failures;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"incomplete Riemann zeta via fractional integrals"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  izeta::EvalConfig cfg;
  app.add_option("--abs-tol", cfg.abs_tol, "absolute tolerance")->capture_default_str();
  app.add_option("--rel-tol", cfg.rel_tol, "relative tolerance")->capture_default_str();
  app.add_option("--max-level", cfg.max_level, "tanh-sinh refinement depth")
      ->capture_default_str();
  app.add_option("--pole-tol", cfg.pole_tol, "prefactor pole exclusion radius")
      ->capture_default_str();

  // ---- eval ----
  auto* eval = app.add_subcommand("eval", "evaluate one point");
  std::string eval_mode = "zeta", eval_s = "2";
  double eval_x = 0.0;
  eval->add_option("--mode", eval_mode, "eta|zeta|frac")->capture_default_str();
  eval->add_option("--s", eval_s, "complex order, e.g. 0.5+14.13i")->capture_default_str();
  eval->add_option("--x", eval_x, "shift (eta/zeta: x >= 0; frac: x <= 0)")
      ->capture_default_str();

  // ---- table ----
  auto* table = app.add_subcommand("table", "sweep a grid and emit CSV or JSON");
  std::string tbl_mode = "zeta", tbl_re = "2", tbl_im = "0", tbl_x = "0";
  std::string tbl_format = "csv", tbl_out;
  table->add_option("--mode", tbl_mode, "eta|zeta|frac")->capture_default_str();
  table->add_option("--re-s", tbl_re, "re(s) axis: value or start:stop:step")
      ->capture_default_str();
  table->add_option("--im-s", tbl_im, "im(s) axis: value or start:stop:step")
      ->capture_default_str();
  table->add_option("--x", tbl_x, "x axis: value or start:stop:step")->capture_default_str();
  table->add_option("--format", tbl_format, "csv|json")->capture_default_str();
  table->add_option("--out", tbl_out, "output file (default stdout)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite, "norm|oracle|bound|semigroup|derivative|all")
      ->capture_default_str();

  // ---- zero-scan ----
  auto* zscan = app.add_subcommand("zero-scan", "minima of |zeta(1/2+it)| on [t-min, t-max]");
  double t_min = 10.0, t_max = 15.0, t_step = 0.05;
  zscan->add_option("--t-min", t_min)->capture_default_str();
  zscan->add_option("--t-max", t_max)->capture_default_str();
  zscan->add_option("--step", t_step)->capture_default_str();

  // ---- symmetry-scan ----
  auto* sscan = app.add_subcommand("symmetry-scan", "max |zeta(s1,x)-zeta(s2,x)| over an x grid");
  std::string s1_text = "0.3+14.13i", s2_text = "0.7+14.13i", sx_axis = "-3:0:0.25";
  sscan->add_option("--s1", s1_text)->capture_default_str();
  sscan->add_option("--s2", s2_text)->capture_default_str();
  sscan->add_option("--x", sx_axis, "x axis: value or start:stop:step")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // help/version exit 0, bad usage exits 2
  }
  cfg.validate();

  if (eval->parsed()) {
    const izeta::EvalMode mode = izeta::parse_mode(eval_mode);
    const izeta::Complex s = parse_complex(eval_s);
    const izeta::TableRow row = izeta::eval_table_point(mode, s, eval_x, cfg);
    if (row.status == "pole") {
      std::fprintf(stderr, "error: prefactor pole at the requested s (zero of 2^s - 2)\n");
      return kExitUsage;
    }
    if (row.status == "domain") {
      std::fprintf(stderr, "error: point outside the domain of mode '%s'\n", eval_mode.c_str());
      return kExitUsage;
    }
    if (row.status == "nonconv") {
      std::fprintf(stderr, "error: quadrature did not converge at the requested tolerance\n");
      return kExitNonConvergence;
    }
    std::printf("%s(s=%s, x=%g) = %s %c %si  (err_est %.3e, %lld evals)\n", eval_mode.c_str(),
                eval_s.c_str(), eval_x, izeta::fmt17(row.value.real()).c_str(),
                row.value.imag() < 0 ? '-' : '+',
                izeta::fmt17(std::abs(row.value.imag())).c_str(), row.err_est,
                static_cast<long long>(row.n_evals));
    return kExitOk;
  }

  if (table->parsed()) {
    const izeta::EvalMode mode = izeta::parse_mode(tbl_mode);
    izeta::GridSpec grid;
    grid.re_s = parse_axis(tbl_re);
    grid.im_s = parse_axis(tbl_im);
    grid.x = parse_axis(tbl_x);
    if (tbl_format != "csv" && tbl_format != "json") {
      throw std::domain_error("format must be csv or json");
    }
    const std::vector<izeta::TableRow> rows = izeta::sweep_table(grid, mode, cfg);

    std::ostringstream body;
    if (tbl_format == "csv") {
      izeta::write_csv(rows, body);
    } else {
      izeta::write_json(rows, body);
    }
    if (tbl_out.empty()) {
      std::cout << body.str();
    } else {
      std::ofstream out(tbl_out);
      if (!out) {
        std::fprintf(stderr, "error: cannot open '%s' for writing\n", tbl_out.c_str());
        return kExitIo;
      }
      out << body.str();
      if (!out.good()) {
        std::fprintf(stderr, "error: write to '%s' failed\n", tbl_out.c_str());
        return kExitIo;
      }
    }
    return kExitOk;
  }

  if (verify->parsed()) {
    std::printf("%s verification suite '%s'\n", kVersion, suite.c_str());
    std::vector<izeta::CheckReport> reports;
    if (suite == "norm") {
      reports = izeta::suites::verify_norm();
    } else if (suite == "oracle") {
      reports = izeta::suites::verify_oracle(cfg);
    } else if (suite == "bound") {
      reports = izeta::suites::verify_bound(cfg);
    } else if (suite == "semigroup") {
      reports = izeta::suites::verify_semigroup(cfg);
    } else if (suite == "derivative") {
      reports = izeta::suites::verify_derivative(cfg);
    } else if (suite == "all") {
      reports = izeta::suites::verify_all(cfg);
    } else {
      throw std::domain_error("unknown suite '" + suite + "'");
    }
    std::size_t failures = 0;
    print_reports(reports, failures);
    std::printf("%zu checks, %zu failed\n", reports.size(), failures);
    return failures == 0 ? kExitOk : kExitVerifyFail;
  }

  if (zscan->parsed()) {
    const std::vector<izeta::ZeroCandidate> hits = izeta::zero_scan(t_min, t_max, t_step, cfg);
    for (const izeta::ZeroCandidate& h : hits) {
      std::printf("t = %.9f  |zeta(1/2+it)| = %.6e\n", h.t, h.abs_value);
    }
    if (hits.empty()) std::printf("no local minima in [%g, %g]\n", t_min, t_max);
    return kExitOk;
  }

  if (sscan->parsed()) {
    const izeta::AxisSpec ax = parse_axis(sx_axis);
    std::vector<double> xs;
    for (std::size_t i = 0; i < ax.count(); ++i) xs.push_back(ax.value(i));
    const double worst =
        izeta::symmetry_scan(parse_complex(s1_text), parse_complex(s2_text), xs, cfg);
    std::printf("max |zeta(s1,x) - zeta(s2,x)| = %.6e over %zu points\n", worst, xs.size());
    return kExitOk;
  }

  return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const izeta::PoleError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const izeta::NonConvergence& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNonConvergence;
  } catch (const izeta::ToleranceUnreachable& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNonConvergence;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
