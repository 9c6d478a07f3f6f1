#ifndef IZETA_ORACLE_HPP
#define IZETA_ORACLE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>

#include <izeta/complexfn.hpp>
#include <izeta/errors.hpp>

// Independent reference path: plain Dirichlet-type sums with geometric tail
// bounds, accelerated alternating sums where the plain sum is too slow.
// This module never calls the quadrature module.

namespace izeta::oracle {

struct SeriesResult {
  Complex value;
  std::int64_t terms_used = 0;
  double truncation_bound = 0.0;
};

namespace detail {

inline constexpr double kAccelBase = 5.82842712474619;  // 3 + sqrt(8)
inline constexpr double kLogAccelBase = 1.7627471740390861;
inline constexpr std::int64_t kPlainCap = 10'000'000;
inline constexpr std::int64_t kAccelCap = 1000;
// (3+sqrt 8)^n overflows past n ~ 390; the bound at 300 terms is already
// far below any representable tolerance.
inline constexpr std::int64_t kAccelOverflowCap = 300;

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=1} (-1)^{k-1} a_k.
// Error bound for totally monotone terms: ~(3+sqrt 8)^{-n}; for complex s the
// term sequence e^{-ky} k^{-s} is handled with the usual (1+2|t|) e^{pi|t|/2}
// inflation of the required term count.
inline Complex cvz_sum(const std::function<Complex(std::int64_t)>& term, std::int64_t n) {
  const double nn = double(n);
  double d = std::pow(kAccelBase, nn);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  Complex acc(0.0, 0.0);
  for (std::int64_t k = 0; k < n; ++k) {
    c = b - c;
    acc += c * term(k + 1);
    const double kk = double(k);
    b = (kk + nn) * (kk - nn) * b / ((kk + 0.5) * (kk + 1.0));
  }
  return acc / d;
}

inline std::int64_t cvz_terms_for(double tol, double im_abs) {
  // log form: the amplitude 3 (1 + 2|t|) e^{pi |t| / 2} overflows long before
  // the term count does
  const double log_amplitude =
      std::log(3.0 * (1.0 + 2.0 * im_abs)) + 1.5707963267948966 * im_abs;
  const double n = std::ceil((log_amplitude + std::log(1.0 / tol)) / kLogAccelBase) + 4.0;
  if (!std::isfinite(n) || n > double(kAccelCap)) return kAccelCap + 1;
  return std::int64_t(std::max(8.0, n));
}

} // namespace detail

// sum_{n>=1} (-1)^{n-1} e^{-n y} n^{-s}, which is the incomplete eta function
// eta(s, y) in series form.  For y away from 0 the plain sum with geometric
// tail bound e^{-(N+1)y}/(1-e^{-y}) is used; at and near y = 0 the plain sum
// converges too slowly and the CVZ-accelerated alternating sum takes over.
inline SeriesResult eta_series(Complex s, double y, double tol) {
  if (!is_finite(s) || !(s.real() > 0.0)) {
    throw std::domain_error("eta_series: requires finite s with re(s) > 0");
  }
  if (!(y >= 0.0) || !std::isfinite(y)) {
    throw std::domain_error("eta_series: requires finite y >= 0");
  }
  if (!(tol >= 1e-14)) throw std::domain_error("eta_series: tol must be >= 1e-14");

  auto term = [&](std::int64_t n) -> Complex {
    const double nd = double(n);
    // n^{-s} e^{-ny} = exp(-ny - re(s) ln n) * e^{-i im(s) ln n}
    const double ln = std::log(nd);
    const double mag_exp = -nd * y - s.real() * ln;
    if (mag_exp < -745.0) return Complex(0.0, 0.0);
    return std::polar(std::exp(mag_exp), -s.imag() * ln);
  };

  SeriesResult r;
  std::int64_t n_geo = detail::kPlainCap + 1;
  if (y > 0.0) {
    const double one_minus = -std::expm1(-y);  // 1 - e^{-y}
    const double need = std::log(1.0 / (tol * one_minus)) / y;
    if (std::isfinite(need) && need < double(detail::kPlainCap)) {
      n_geo = std::int64_t(std::ceil(std::max(1.0, need)));
    }
  }

  if (y > 0.0 && n_geo <= 20000) {
    Complex acc(0.0, 0.0);
    double sign = 1.0;
    for (std::int64_t n = 1; n <= n_geo; ++n) {
      acc += sign * term(n);
      sign = -sign;
    }
    r.value = acc;
    r.terms_used = n_geo;
    r.truncation_bound = std::exp(-double(n_geo + 1) * y) / (-std::expm1(-y));
  } else {
    const std::int64_t n = detail::cvz_terms_for(tol, std::abs(s.imag()));
    if (n > detail::kAccelCap || n > detail::kAccelOverflowCap) {
      throw ToleranceUnreachable("eta_series: accelerated term count exceeds hard cap");
    }
    r.value = detail::cvz_sum(term, n);
    r.terms_used = n;
    r.truncation_bound = tol;
  }
  require_finite(r.value, "eta_series");
  return r;
}

// zeta(s) = eta(s, 0) / (1 - 2^{1-s}), re(s) > 0, away from zeros of 2^s - 2.
inline SeriesResult zeta_series(Complex s, double tol, double pole_tolerance = kDefaultPoleTol) {
  const PrefactorValue pf = prefactor_eta_to_zeta(s, pole_tolerance);
  SeriesResult r = eta_series(s, 0.0, tol);
  r.value *= pf.value;
  r.truncation_bound *= std::abs(pf.value);
  require_finite(r.value, "zeta_series");
  return r;
}

// f(t) = 1/(e^{-t} + 1), the function whose fractional integrals are taken.
inline double fermi_reflected(double t) {
  if (t < -700.0) return 0.0;
  return 1.0 / (std::exp(-t) + 1.0);
}

// X_1 norm of f: integral of f(t) e^{-|t|} over the whole line.  Split at 0
// and reflect the negative half with f(-t) = 1 - f(t):
//   |f| = int_0^inf e^{-t} f(t) dt + int_0^inf e^{-t} f(-t) dt.
// Expanding f(t) = sum_{n>=0} (-1)^n e^{-nt} (t > 0) gives two alternating
// series, sum (-1)^{k-1}/k and sum (-1)^{k-1}/(k+1), both CVZ-accelerated.
// The exact value is 1.
inline double norm_X1() {
  const std::int64_t n = detail::cvz_terms_for(1e-13, 0.0);
  const Complex right = detail::cvz_sum([](std::int64_t k) { return Complex(1.0 / double(k), 0.0); }, n);
  const Complex left = detail::cvz_sum([](std::int64_t k) { return Complex(1.0 / double(k + 1), 0.0); }, n);
  return right.real() + left.real();
}

} // namespace izeta::oracle

#endif // IZETA_ORACLE_HPP
