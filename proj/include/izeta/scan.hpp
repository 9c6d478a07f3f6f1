#ifndef IZETA_SCAN_HPP
#define IZETA_SCAN_HPP

#include <cmath>
#include <vector>

#include <izeta/fraczeta.hpp>

// Exploratory scans: locating minima of |zeta(1/2 + it)| along the critical
// line, and measuring how far two orders s1, s2 are from giving the same
// incomplete zeta over a grid of x values.

namespace izeta {

// Minimize a unimodal scalar function on [a, b] by golden-section search.
template <class F>
inline double golden_section_min(const F& f, double a, double b, double xtol) {
  const double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

struct ZeroCandidate {
  double t = 0.0;        // refined ordinate of the local minimum
  double abs_value = 0.0;  // |zeta(1/2 + it)| there
};

// Sample |zeta(1/2 + it)| on a uniform grid over [t_min, t_max], bracket each
// interior local minimum, and refine it with golden-section search.  Step must
// be fine enough to separate neighbouring zeros; ~0.05 suffices below t = 30.
inline std::vector<ZeroCandidate> zero_scan(double t_min, double t_max, double step,
                                            const EvalConfig& cfg) {
  if (!(step > 0.0) || !(t_min < t_max) || !std::isfinite(t_min) || !std::isfinite(t_max)) {
    throw std::domain_error("zero_scan: requires finite t_min < t_max and step > 0");
  }
  const std::size_t n = std::size_t((t_max - t_min) / step) + 1;
  if (n < 3) {
    throw std::domain_error("zero_scan: grid degenerate, needs at least 3 samples");
  }

  auto mag = [&](double t) { return std::abs(zeta_complete({0.5, t}, cfg)); };

  std::vector<double> ts(n), vals(n);
  for (std::size_t i = 0; i < n; ++i) {
    ts[i] = t_min + double(i) * step;
    vals[i] = mag(ts[i]);
  }

  std::vector<ZeroCandidate> out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (vals[i] <= vals[i - 1] && vals[i] <= vals[i + 1]) {
      const double t = golden_section_min(mag, ts[i - 1], ts[i + 1], 1e-8);
      out.push_back({t, mag(t)});
    }
  }
  return out;
}

// max over the x grid of |zeta(s1, x) - zeta(s2, x)|: a direct probe of
// whether two distinct orders can agree as functions of x.
inline double symmetry_scan(Complex s1, Complex s2, const std::vector<double>& x_grid,
                            const EvalConfig& cfg) {
  if (x_grid.empty()) {
    throw std::domain_error("symmetry_scan: x grid must be non-empty");
  }
  double worst = 0.0;
  for (double x : x_grid) {
    const Complex d = zeta_frac({s1, x}, cfg) - zeta_frac({s2, x}, cfg);
    worst = std::max(worst, std::abs(d));
  }
  return worst;
}

} // namespace izeta

#endif // IZETA_SCAN_HPP
