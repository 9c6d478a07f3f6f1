#ifndef IZETA_FRACZETA_HPP
#define IZETA_FRACZETA_HPP

#include <cmath>
#include <complex>

#include <izeta/complexfn.hpp>
#include <izeta/oracle.hpp>
#include <izeta/quadrature.hpp>

// The incomplete eta/zeta functions and the improper-lower-bound
// Riemann-Liouville fractional integral of f(t) = 1/(e^{-t} + 1).
//
// Coordinate convention: eta(s, x) lives on x in [0, inf); the fractional
// integral lives on x in (-inf, 0], and the substitution t -> -t in its
// defining integral gives (I^s f)(x) = eta(s, -x).  The two point types
// below make that sign conversion explicit and type-checked.

namespace izeta {

struct EtaCoordinatePoint {
  Complex s;
  double x = 0.0;  // shift, x >= 0

  void validate() const {
    if (!is_finite(s) || !(s.real() > 0.0)) {
      throw std::domain_error("EtaCoordinatePoint: requires finite s with re(s) > 0");
    }
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw std::domain_error("EtaCoordinatePoint: requires finite x >= 0");
    }
  }
};

struct FracCoordinatePoint {
  Complex s;
  double x = 0.0;  // upper integration limit, x <= 0

  void validate() const {
    if (!is_finite(s) || !(s.real() > 0.0)) {
      throw std::domain_error("FracCoordinatePoint: requires finite s with re(s) > 0");
    }
    if (!(x <= 0.0) || !std::isfinite(x)) {
      throw std::domain_error("FracCoordinatePoint: requires finite x <= 0");
    }
  }
};

// eta(s, x) = (1/Gamma(s)) * integral over t in [x, inf) of (t-x)^{s-1}/(e^t + 1).
inline Complex eta_incomplete(const EtaCoordinatePoint& p, const EvalConfig& cfg) {
  p.validate();
  const QuadResult q = fermi_power_integral(p.s, p.x, cfg);
  const Complex r = q.value / gamma_fn(p.s);
  require_finite(r, "eta_incomplete");
  return r;
}

// zeta(s, x) = 2^s/(2^s - 2) * eta(s, x).
inline Complex zeta_incomplete(const EtaCoordinatePoint& p, const EvalConfig& cfg) {
  p.validate();
  const PrefactorValue pf = prefactor_eta_to_zeta(p.s, cfg.pole_tol);
  return pf.value * eta_incomplete(p, cfg);
}

// (I^s f)(x) with improper lower bound, f(t) = 1/(e^{-t} + 1), x <= 0.
inline Complex frac_integral(const FracCoordinatePoint& p, const EvalConfig& cfg) {
  p.validate();
  return eta_incomplete({p.s, -p.x}, cfg);
}

// zeta(s, x) on the fractional-integral side: 2^s/(2^s - 2) * (I^s f)(x).
inline Complex zeta_frac(const FracCoordinatePoint& p, const EvalConfig& cfg) {
  p.validate();
  const PrefactorValue pf = prefactor_eta_to_zeta(p.s, cfg.pole_tol);
  return pf.value * frac_integral(p, cfg);
}

// The complete zeta function for re(s) > 0, s off the prefactor poles:
// zeta(s) = zeta(s, 0).
inline Complex zeta_complete(Complex s, const EvalConfig& cfg) {
  return zeta_frac({s, 0.0}, cfg);
}

// (I^alpha)(I^beta f)(x) = (1/Gamma(alpha)) * integral over u in [0, inf)
// of u^{alpha-1} eta(beta, u - x).  The inner eta comes from the series
// oracle by default; cfg.nested_inner forces a full (slower) nested
// quadrature instead.
inline Complex frac_compose(Complex alpha, Complex beta, double x, const EvalConfig& cfg) {
  cfg.validate();
  if (!is_finite(alpha) || !(alpha.real() > 0.0) || !is_finite(beta) || !(beta.real() > 0.0)) {
    throw std::domain_error("frac_compose: requires finite orders with positive real part");
  }
  if (!(x <= 0.0) || !std::isfinite(x)) {
    throw std::domain_error("frac_compose: requires finite x <= 0");
  }

  std::function<Complex(double)> inner;
  if (cfg.nested_inner) {
    EvalConfig inner_cfg = cfg;
    inner_cfg.abs_tol = std::max(1e-13, 0.1 * cfg.abs_tol);
    const Complex gb = gamma_fn(beta);
    inner = [beta, gb, inner_cfg](double v) -> Complex {
      return fermi_power_integral(beta, v, inner_cfg).value / gb;
    };
  } else {
    const double inner_tol = std::max(1e-14, 0.01 * cfg.abs_tol);
    inner = [beta, inner_tol](double v) -> Complex {
      return oracle::eta_series(beta, v, inner_tol).value;
    };
  }

  // |eta(beta, v)| <= e^{-v}/(1 - e^{-v}) <= 1.6 e^{-v} for v >= 1
  const DecayEnvelope env{1.0, 1.6, 1.0};
  const QuadResult q = weighted_outer_integral(alpha, x, inner, env, cfg);
  const Complex r = q.value / gamma_fn(alpha);
  require_finite(r, "frac_compose");
  return r;
}

// d/dx zeta(s, x) by central differences with one Richardson step (h0, h0/2).
// At the boundary x = 0 the stencil switches to a backward one of the same
// order, since the domain is (-inf, 0].
inline Complex dx_zeta_frac(const FracCoordinatePoint& p, const EvalConfig& cfg, double h0 = 1e-3) {
  p.validate();
  if (!(h0 > 0.0) || !std::isfinite(h0)) {
    throw std::domain_error("dx_zeta_frac: requires finite h0 > 0");
  }
  auto g = [&](double xx) { return zeta_frac({p.s, xx}, cfg); };

  Complex d_h, d_h2;
  if (p.x + 2.0 * h0 <= 0.0) {
    const Complex gp1 = g(p.x + h0), gm1 = g(p.x - h0);
    const Complex gp2 = g(p.x + 0.5 * h0), gm2 = g(p.x - 0.5 * h0);
    d_h = (gp1 - gm1) / (2.0 * h0);
    d_h2 = (gp2 - gm2) / h0;
  } else {
    const Complex g0 = g(p.x);
    const Complex gm1 = g(p.x - 0.5 * h0), gm2 = g(p.x - h0), gm4 = g(p.x - 2.0 * h0);
    d_h = (3.0 * g0 - 4.0 * gm2 + gm4) / (2.0 * h0);
    d_h2 = (3.0 * g0 - 4.0 * gm1 + gm2) / h0;
  }
  if (std::abs(d_h2 - d_h) > cfg.deriv_tol) {
    throw StepTooLarge("dx_zeta_frac: Richardson disagreement above deriv_tol; reduce h0");
  }
  const Complex r = (4.0 * d_h2 - d_h) / 3.0;
  require_finite(r, "dx_zeta_frac");
  return r;
}

// Residual of the derivative functional equation
//   zeta(s, x) = (2^s - 1)/(2^s - 2) * d/dx zeta(s+1, x).
inline double theorem2_residual(Complex s, double x, const EvalConfig& cfg, double h0 = 1e-3) {
  const Complex lhs = zeta_frac({s, x}, cfg);
  const Complex pf = prefactor_theorem2(s, cfg.pole_tol);
  const Complex rhs = pf * dx_zeta_frac({s + Complex(1.0, 0.0), x}, cfg, h0);
  return std::abs(lhs - rhs);
}

} // namespace izeta

#endif // IZETA_FRACZETA_HPP
