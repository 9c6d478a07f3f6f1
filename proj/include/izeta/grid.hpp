#ifndef IZETA_GRID_HPP
#define IZETA_GRID_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include <izeta/fraczeta.hpp>

namespace izeta {

struct AxisSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  void validate() const {
    if (!(step > 0.0) || !(start <= stop) || !std::isfinite(start) || !std::isfinite(stop)) {
      throw std::domain_error("AxisSpec: requires step > 0 and start <= stop");
    }
  }
  std::size_t count() const {
    return std::size_t((stop - start) / step + 1e-9) + 1;
  }
  double value(std::size_t i) const { return start + double(i) * step; }
};

// Rectangular sweep over (re s, im s, x).
struct GridSpec {
  AxisSpec re_s, im_s, x;
  void validate() const {
    re_s.validate();
    im_s.validate();
    x.validate();
  }
};

enum class EvalMode { Eta, Zeta, Frac };

inline EvalMode parse_mode(const std::string& m) {
  if (m == "eta") return EvalMode::Eta;
  if (m == "zeta") return EvalMode::Zeta;
  if (m == "frac") return EvalMode::Frac;
  throw std::domain_error("mode must be one of eta|zeta|frac");
}

struct TableRow {
  double re_s = 0.0, im_s = 0.0, x = 0.0;
  Complex value;
  double err_est = 0.0;
  std::int64_t n_evals = 0;
  std::string status = "ok";  // "ok" | "pole" | "domain" | "nonconv"
};

// Evaluate one point; failures land in the status column instead of throwing.
inline TableRow eval_table_point(EvalMode mode, Complex s, double x, const EvalConfig& cfg) {
  TableRow row;
  row.re_s = s.real();
  row.im_s = s.imag();
  row.x = x;
  try {
    const double x_eta = (mode == EvalMode::Frac) ? -x : x;
    if (mode == EvalMode::Frac ? !(x <= 0.0) : !(x >= 0.0)) {
      throw std::domain_error("x outside mode domain");
    }
    const QuadResult q = fermi_power_integral(s, x_eta, cfg);
    const Complex g = gamma_fn(s);
    Complex v = q.value / g;
    double err = q.err_estimate / std::abs(g);
    if (mode == EvalMode::Zeta) {
      const PrefactorValue pf = prefactor_eta_to_zeta(s, cfg.pole_tol);
      v *= pf.value;
      err *= std::abs(pf.value);
    }
    require_finite(v, "eval_table_point");
    row.value = v;
    row.err_est = err;
    row.n_evals = q.n_evals;
  } catch (const PoleError&) {
    row.status = "pole";
  } catch (const NonConvergence&) {
    row.status = "nonconv";
  } catch (const std::domain_error&) {
    row.status = "domain";
  }
  return row;
}

// One row per grid point, lexicographic in (re_s, im_s, x).
inline std::vector<TableRow> sweep_table(const GridSpec& grid, EvalMode mode,
                                         const EvalConfig& cfg) {
  grid.validate();
  std::vector<TableRow> rows;
  rows.reserve(grid.re_s.count() * grid.im_s.count() * grid.x.count());
  for (std::size_t i = 0; i < grid.re_s.count(); ++i)
    for (std::size_t j = 0; j < grid.im_s.count(); ++j)
      for (std::size_t k = 0; k < grid.x.count(); ++k) {
        rows.push_back(eval_table_point(
            mode, {grid.re_s.value(i), grid.im_s.value(j)}, grid.x.value(k), cfg));
      }
  return rows;
}

// 17 significant digits: enough for bit-exact round-trip of a double.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_csv(const std::vector<TableRow>& rows, std::ostream& os) {
  os << "re_s,im_s,x,re_val,im_val,err_est,n_evals,status\n";
  for (const TableRow& r : rows) {
    os << fmt17(r.re_s) << ',' << fmt17(r.im_s) << ',' << fmt17(r.x) << ',';
    if (r.status == "ok") {
      os << fmt17(r.value.real()) << ',' << fmt17(r.value.imag()) << ',' << fmt17(r.err_est)
         << ',' << r.n_evals;
    } else {
      os << ",,,";
    }
    os << ',' << r.status << '\n';
  }
}

inline nlohmann::json rows_to_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TableRow& r : rows) {
    nlohmann::json o;
    o["re_s"] = r.re_s;
    o["im_s"] = r.im_s;
    o["x"] = r.x;
    if (r.status == "ok") {
      o["re_val"] = r.value.real();
      o["im_val"] = r.value.imag();
      o["err_est"] = r.err_est;
      o["n_evals"] = r.n_evals;
    } else {
      o["re_val"] = nullptr;
      o["im_val"] = nullptr;
      o["err_est"] = nullptr;
      o["n_evals"] = nullptr;
    }
    o["status"] = r.status;
    arr.push_back(o);
  }
  return arr;
}

inline void write_json(const std::vector<TableRow>& rows, std::ostream& os) {
  os << rows_to_json(rows).dump(2) << '\n';
}

} // namespace izeta

#endif // IZETA_GRID_HPP
