#ifndef IZETA_QUADRATURE_HPP
#define IZETA_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>

#include <izeta/complexfn.hpp>
#include <izeta/errors.hpp>

namespace izeta {

// Tolerances and refinement limits governing every numerical evaluation.
struct EvalConfig {
  double abs_tol = 1e-11;
  double rel_tol = 1e-11;
  int max_level = 10;          // tanh-sinh refinement depth per panel
  double split_point = 1.0;    // boundary between singular head and smooth tail
  double tail_tol_fraction = 0.1;
  double pole_tol = kDefaultPoleTol;
  double deriv_tol = 1e-6;     // Richardson disagreement limit for d/dx
  bool nested_inner = false;   // force full nested quadrature in compositions

  void validate() const {
    if (!(abs_tol >= 1e-15) || !(rel_tol >= 1e-15)) {
      throw std::domain_error("EvalConfig: abs_tol and rel_tol must be >= 1e-15");
    }
    if (max_level < 1 || max_level > 12) {
      throw std::domain_error("EvalConfig: max_level must be in [1, 12]");
    }
    if (!(split_point > 0.0) || !std::isfinite(split_point)) {
      throw std::domain_error("EvalConfig: split_point must be positive");
    }
    if (!(tail_tol_fraction > 0.0) || !(tail_tol_fraction < 1.0)) {
      throw std::domain_error("EvalConfig: tail_tol_fraction must be in (0,1)");
    }
    if (!(pole_tol > 0.0)) {
      throw std::domain_error("EvalConfig: pole_tol must be positive");
    }
  }
};

struct QuadResult {
  Complex value;
  double err_estimate = 0.0;
  std::int64_t n_evals = 0;
  double truncation_point = 0.0;  // the finite upper limit U actually used
};

// Upper incomplete gamma Gamma(a, x) for real a > 0, x > 0, by the standard
// continued fraction (modified Lentz).  Used only for certified tail bounds,
// so it is evaluated where the fraction converges quickly (x not far below a).
inline double upper_incomplete_gamma(double a, double x) {
  if (!(a > 0.0) || !(x > 0.0)) {
    throw std::domain_error("upper_incomplete_gamma: requires a > 0, x > 0");
  }
  const double log_front = -x + a * std::log(x);
  if (log_front - std::lgamma(a) < -700.0) return 0.0;
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 400; ++i) {
    const double an = -double(i) * (double(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-14) break;
  }
  return std::exp(log_front) * h;
}

namespace detail {

// One tanh-sinh panel on [a, b].  The integrand is called with the abscissa
// and, for endpoint-singular integrands, the abscissa near the left endpoint
// is computed from the distance formula 1 + tanh(z) = 2/(1 + exp(-2z)) so no
// precision is lost there.
struct PanelOutcome {
  Complex value;
  double err = 0.0;
  std::int64_t n_evals = 0;
  bool converged = false;
};

inline constexpr double kTsTmax = 6.0;
inline constexpr double kTsH0 = 0.5;

template <class F>
inline Complex ts_eval(const F& f, double a, double b, double t) {
  const double half_pi = 1.5707963267948966;
  const double z = half_pi * std::sinh(t);
  double u;
  if (t <= 0.0) {
    const double e = std::exp(-2.0 * z);  // >= 1
    if (!std::isfinite(e)) return Complex(0.0, 0.0);
    u = a + (b - a) / (1.0 + e);
  } else {
    const double e = std::exp(2.0 * z);
    if (!std::isfinite(e)) return Complex(0.0, 0.0);
    u = b - (b - a) / (1.0 + e);
  }
  if (u <= a || u >= b) return Complex(0.0, 0.0);
  const double cz = std::cosh(z);
  const double w = 0.5 * (b - a) * half_pi * std::cosh(t) / (cz * cz);
  if (w == 0.0 || !std::isfinite(w)) return Complex(0.0, 0.0);
  const Complex fv = f(u);
  return w * fv;
}

template <class F>
inline PanelOutcome tanh_sinh_panel(const F& f, double a, double b, double tol, int max_level) {
  PanelOutcome out;
  double h = kTsH0;
  Complex sum(0.0, 0.0);
  {
    // level 0: t = k*h, |t| <= tmax
    const int kmax = int(kTsTmax / h);
    for (int k = -kmax; k <= kmax; ++k) {
      sum += ts_eval(f, a, b, double(k) * h);
      ++out.n_evals;
    }
  }
  Complex prev = sum * h;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    Complex add(0.0, 0.0);
    const int kmax = int(kTsTmax / h);
    for (int k = -kmax; k <= kmax; ++k) {
      if (k % 2 == 0) continue;  // odd multiples of the new h only
      add += ts_eval(f, a, b, double(k) * h);
      ++out.n_evals;
    }
    sum += add;
    const Complex cur = sum * h;
    out.err = std::abs(cur - prev);
    prev = cur;
    if (level >= 2 && out.err <= tol) {
      out.converged = true;
      break;
    }
  }
  out.value = prev;
  return out;
}

// Head integral over [0, A] of u^{s-1} w(x+u), w(y) = 1/(e^y + 1), by the
// Taylor expansion of w about x:
//   sum_m c_m A^{s+m}/(s+m),  c_m = w^{(m)}(x)/m!.
// The coefficients follow from the Riccati relation w' = w^2 - w:
//   c_{m+1} = (sum_{j<=m} c_j c_{m-j} - c_m) / (m+1).
// w is analytic with poles at x + i pi (2k+1), so the disc radius is at
// least pi for real x and the series converges geometrically for A < pi.
// Unlike a tanh-sinh panel this is immune to the u^{i im(s)} endpoint
// oscillation, which aliases the trapezoid sums for |im(s)| beyond ~5.
struct HeadOutcome {
  Complex value;
  double err = 0.0;
  std::int64_t n_terms = 0;
};

// When the ray is rotated by theta the expansion variable is r e^{i theta},
// so term m picks up a phase e^{i m theta}; the coefficients stay real.
inline HeadOutcome taylor_head(Complex s, double x, double A, double theta, double tol) {
  constexpr int kMaxTerms = 140;
  double c[kMaxTerms];
  c[0] = (x > 700.0) ? 0.0 : 1.0 / (std::exp(x) + 1.0);

  const Complex a_pow_s = pow_realbase(A, s);
  const double abs_a_pow_s = std::abs(a_pow_s);
  const double q = A / 3.1;  // geometric ratio bound, A held below pi
  const Complex rot = std::polar(1.0, theta);

  HeadOutcome out;
  double a_pow_m = 1.0;
  Complex rot_m(1.0, 0.0);
  int quiet = 0;
  int m = 0;
  for (; m < kMaxTerms; ++m) {
    const Complex denom = s + Complex(double(m), 0.0);
    out.value += c[m] * a_pow_m * rot_m * a_pow_s / denom;
    const double mag = std::abs(c[m]) * a_pow_m * abs_a_pow_s / std::abs(denom);
    out.err = mag * q / (1.0 - q);
    quiet = (mag < 0.05 * tol) ? quiet + 1 : 0;
    if (quiet >= 2) break;
    if (m + 1 < kMaxTerms) {
      double conv = 0.0;
      for (int j = 0; j <= m; ++j) conv += c[j] * c[m - j];
      c[m + 1] = (conv - c[m]) / double(m + 1);
    }
    a_pow_m *= A;
    rot_m *= rot;
  }
  out.n_terms = m + 1;
  return out;
}

// Truncation point U such that envelope_constant * Gamma(a, rate*U) / rate^a
// falls below the target; the caller folds any e^{±x} factor into the target.
inline double choose_truncation(double a, double rate, double envelope_constant,
                                double target, double lower_limit) {
  double u = std::max({lower_limit, 2.0 * a / rate, 10.0 / rate});
  const double cap = 600.0 / rate;
  const double scale = envelope_constant / std::pow(rate, a);
  while (u < cap && scale * upper_incomplete_gamma(a, rate * u) > target) {
    u += 4.0 / rate;
  }
  return u;
}

} // namespace detail

// Gamma(s) * eta(s, x):  integral over u in [0, inf) of u^{s-1} / (e^{x+u} + 1).
// The value is NOT divided by Gamma(s).
//
// Evaluation: the endpoint-singular head [0, A] is summed as a certified
// power series (taylor_head above); the smooth remainder is tanh-sinh
// integrated up to a truncation point U with an incomplete-gamma tail bound
// (1/(e^{x+u}+1) <= e^{-x-u}).
//
// For |im(s)| beyond a few units the integral equals Gamma(s) eta(s, x),
// which is exponentially small (~e^{-pi |im|/2}) while the integrand stays
// O(1); on the real axis the value drowns in rounding noise long before the
// panels stop converging.  The integrand is analytic in the sector between
// the positive real axis and the ray arg u = theta for any |theta| < pi/2
// (its poles sit at u = -x + i pi (2k+1)), so the path is rotated to
// u = r e^{i theta} with theta = sign(im) pi/4.  That damps the value by
// e^{-|im| theta} only, not e^{-pi |im|/2}, and restores relative accuracy.
inline QuadResult fermi_power_integral(Complex s, double x, const EvalConfig& cfg) {
  cfg.validate();
  if (!is_finite(s) || !(s.real() > 0.0)) {
    throw std::domain_error("fermi_power_integral: requires finite s with re(s) > 0");
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error("fermi_power_integral: requires finite x >= 0");
  }

  const double im = s.imag();
  const double theta = (std::abs(im) >= 2.0) ? std::copysign(0.78539816339744831, im) : 0.0;
  const double cos_th = std::cos(theta);
  const Complex ray = std::polar(1.0, theta);
  // value of the rotated integral J: I = e^{i s theta} J
  const double damp = std::exp(-theta * im);  // |e^{i s theta}|, <= 1

  // Tolerance for J, scaled down when even the damped value is small
  // (|J| ~ |Gamma(s)| e^{theta im}), floored at achievable double rounding.
  const double abs_gamma = std::exp(log_gamma(s).real());
  const double value_scale = std::min(1.0, abs_gamma / damp);
  const double eff_abs = std::max(5e-15, cfg.abs_tol * value_scale);

  // |w(x + r e^{i theta})| <= 2 e^{-x - r cos theta} once x + r cos theta >= ln 2
  const double tail_target =
      0.5 * cfg.tail_tol_fraction * eff_abs * std::exp(std::min(x, 600.0));
  const double upper =
      detail::choose_truncation(s.real(), cos_th, 1.0, tail_target, cfg.split_point + 4.0);
  const double tail_bound = 2.0 * std::exp(-x) *
                            upper_incomplete_gamma(s.real(), cos_th * upper) /
                            std::pow(cos_th, s.real());

  const Complex sm1 = s - Complex(1.0, 0.0);
  auto integrand = [&](double r) -> Complex {
    const Complex z = Complex(x, 0.0) + r * ray;
    if (z.real() > 700.0) return Complex(0.0, 0.0);
    const Complex w = 1.0 / (std::exp(z) + 1.0);
    return pow_realbase(r, sm1) * w;
  };

  const double panel_tol = 0.5 * (1.0 - cfg.tail_tol_fraction) * eff_abs;
  const double head_end = std::min(cfg.split_point, 1.5);
  const auto head = detail::taylor_head(s, x, head_end, theta, panel_tol);
  detail::PanelOutcome mid;
  mid.converged = true;
  if (head_end < cfg.split_point) {
    mid = detail::tanh_sinh_panel(integrand, head_end, cfg.split_point, panel_tol, cfg.max_level);
  }
  const auto tail = detail::tanh_sinh_panel(integrand, cfg.split_point, upper, panel_tol, cfg.max_level);

  const Complex phase = std::exp(Complex(0.0, theta) * s);
  QuadResult r;
  r.value = phase * (head.value + mid.value + tail.value);
  r.err_estimate = damp * (head.err + mid.err + tail.err + tail_bound);
  r.n_evals = head.n_terms + mid.n_evals + tail.n_evals;
  r.truncation_point = upper;

  const double tol = std::max(eff_abs, cfg.rel_tol * std::abs(head.value + mid.value + tail.value));
  if ((!mid.converged && mid.err > tol) || (!tail.converged && tail.err > tol) || head.err > tol) {
    throw NonConvergence("fermi_power_integral: panel error above tolerance at max_level");
  }
  require_finite(r.value, "fermi_power_integral");
  return r;
}

// Declared exponential decay of a caller-supplied inner function:
// |inner(v)| <= constant * e^{-rate * v} for v >= valid_from.
struct DecayEnvelope {
  double rate = 1.0;
  double constant = 1.0;
  double valid_from = 1.0;
};

// Integral over u in [0, inf) of u^{alpha-1} * inner(u - x), for x <= 0.
// This is the outer integral of a fractional-integral composition after the
// shift to the origin.  Truncation uses the caller's decay envelope; sampled
// values of |inner| are checked against it.
inline QuadResult weighted_outer_integral(Complex alpha, double x,
                                          const std::function<Complex(double)>& inner,
                                          const DecayEnvelope& env, const EvalConfig& cfg) {
  cfg.validate();
  if (!is_finite(alpha) || !(alpha.real() > 0.0)) {
    throw std::domain_error("weighted_outer_integral: requires finite alpha with re(alpha) > 0");
  }
  if (!(x <= 0.0) || !std::isfinite(x)) {
    throw std::domain_error("weighted_outer_integral: requires finite x <= 0");
  }
  if (!(env.rate > 0.0) || !(env.constant > 0.0)) {
    throw std::domain_error("weighted_outer_integral: envelope rate and constant must be positive");
  }

  const double a = alpha.real();
  // tail over [U, inf): |u^{alpha-1} inner(u-x)| <= C e^{rate*x} u^{a-1} e^{-rate*u}
  const double tail_target =
      cfg.tail_tol_fraction * cfg.abs_tol * std::exp(-env.rate * x);  // x <= 0, so this relaxes
  const double upper =
      detail::choose_truncation(a, env.rate, env.constant, tail_target, cfg.split_point + 4.0);
  const double tail_bound = env.constant * std::exp(env.rate * x) *
                            upper_incomplete_gamma(a, env.rate * upper) / std::pow(env.rate, a);

  const Complex am1 = alpha - Complex(1.0, 0.0);
  auto integrand = [&](double u) -> Complex {
    const double v = u - x;
    const Complex fv = inner(v);
    if (v >= env.valid_from) {
      const double cap = env.constant * std::exp(-env.rate * v);
      if (std::abs(fv) > cap * (1.0 + 1e-9) + 1e-300) {
        throw EnvelopeViolation("weighted_outer_integral: |inner| exceeds declared envelope");
      }
    }
    return pow_realbase(u, am1) * fv;
  };

  const double panel_tol = 0.5 * (1.0 - cfg.tail_tol_fraction) * cfg.abs_tol;
  const auto head = detail::tanh_sinh_panel(integrand, 0.0, cfg.split_point, panel_tol, cfg.max_level);
  const auto tail = detail::tanh_sinh_panel(integrand, cfg.split_point, upper, panel_tol, cfg.max_level);

  QuadResult r;
  r.value = head.value + tail.value;
  r.err_estimate = head.err + tail.err + tail_bound;
  r.n_evals = head.n_evals + tail.n_evals;
  r.truncation_point = upper;

  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value));
  if ((!head.converged && head.err > tol) || (!tail.converged && tail.err > tol)) {
    throw NonConvergence("weighted_outer_integral: level difference above tolerance at max_level");
  }
  require_finite(r.value, "weighted_outer_integral");
  return r;
}

} // namespace izeta

#endif // IZETA_QUADRATURE_HPP
