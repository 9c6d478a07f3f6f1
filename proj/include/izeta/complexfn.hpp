#ifndef IZETA_COMPLEXFN_HPP
#define IZETA_COMPLEXFN_HPP

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include <izeta/errors.hpp>

namespace izeta {

using Complex = std::complex<double>;

inline constexpr double kDefaultPoleTol = 1e-12;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) {
    throw std::range_error(std::string(what) + ": result overflowed or is not finite");
  }
}

// u^s for real u > 0, principal real logarithm.  Computed in polar form so
// that pow_realbase(u, conj(s)) == conj(pow_realbase(u, s)) holds exactly.
inline Complex pow_realbase(double u, Complex s) {
  if (!(u > 0.0) || !std::isfinite(u)) {
    throw std::domain_error("pow_realbase: base must be positive and finite");
  }
  const double lu = std::log(u);
  const Complex r = std::polar(std::exp(s.real() * lu), s.imag() * lu);
  require_finite(r, "pow_realbase");
  return r;
}

namespace detail {

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set as
// used by GSL and Boost).  Relative error of exp(log_gamma) is below
// ~1e-14 on the half-plane re > 0 for moderate |im|.
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

inline Complex log_gamma_upper_half(Complex s) {
  Complex a(kLanczosCoeff[0], 0.0);
  for (int k = 1; k < 15; ++k) {
    a += kLanczosCoeff[k] / (s + Complex(double(k - 1), 0.0));
  }
  const Complex t = s + Complex(kLanczosG - 0.5, 0.0);
  const double half_log_2pi = 0.91893853320467274178;
  return Complex(half_log_2pi, 0.0) + (s - Complex(0.5, 0.0)) * std::log(t) - t + std::log(a);
}

} // namespace detail

// Principal-branch log Gamma(s) on the half-plane re(s) > 0.
inline Complex log_gamma(Complex s) {
  if (!is_finite(s)) throw std::domain_error("log_gamma: argument not finite");
  if (!(s.real() > 0.0)) throw std::domain_error("log_gamma: requires re(s) > 0");
  // mirror to the upper half plane so conjugate symmetry is exact
  const Complex r = (s.imag() < 0.0)
                        ? std::conj(detail::log_gamma_upper_half(std::conj(s)))
                        : detail::log_gamma_upper_half(s);
  require_finite(r, "log_gamma");
  return r;
}

inline Complex gamma_fn(Complex s) {
  const Complex r = std::exp(log_gamma(s));
  require_finite(r, "gamma_fn");
  return r;
}

// The conversion factor 2^s / (2^s - 2) with explicit denominator magnitude.
// Construction fails (PoleError) whenever |2^s - 2| <= pole_tolerance; that
// covers s = 1 and every other zero s = 1 + 2*pi*i*k/ln 2 of the denominator.
struct PrefactorValue {
  Complex value;
  double denom_magnitude = 0.0;
};

namespace detail {

inline Complex two_pow_minus_two(Complex s, double pole_tolerance, const char* who) {
  if (!is_finite(s)) throw std::domain_error(std::string(who) + ": argument not finite");
  if (!(s.real() > 0.0)) throw std::domain_error(std::string(who) + ": requires re(s) > 0");
  if (!(pole_tolerance > 0.0)) {
    throw std::domain_error(std::string(who) + ": pole tolerance must be positive");
  }
  const Complex denom = pow_realbase(2.0, s) - Complex(2.0, 0.0);
  if (std::abs(denom) <= pole_tolerance) {
    std::ostringstream os;
    os << who << ": prefactor pole at s = " << s.real();
    if (s.imag() != 0.0) os << (s.imag() < 0 ? " - " : " + ") << std::abs(s.imag()) << "i";
    os << " (zero of 2^s - 2)";
    throw PoleError(os.str());
  }
  return denom;
}

} // namespace detail

inline PrefactorValue prefactor_eta_to_zeta(Complex s, double pole_tolerance = kDefaultPoleTol) {
  const Complex denom = detail::two_pow_minus_two(s, pole_tolerance, "prefactor_eta_to_zeta");
  PrefactorValue p;
  p.value = pow_realbase(2.0, s) / denom;
  p.denom_magnitude = std::abs(denom);
  require_finite(p.value, "prefactor_eta_to_zeta");
  return p;
}

// The constant (2^s - 1)/(2^s - 2) from the derivative functional equation.
inline Complex prefactor_theorem2(Complex s, double pole_tolerance = kDefaultPoleTol) {
  const Complex denom = detail::two_pow_minus_two(s, pole_tolerance, "prefactor_theorem2");
  const Complex r = (pow_realbase(2.0, s) - Complex(1.0, 0.0)) / denom;
  require_finite(r, "prefactor_theorem2");
  return r;
}

} // namespace izeta

#endif // IZETA_COMPLEXFN_HPP
