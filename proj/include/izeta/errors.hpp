#ifndef IZETA_ERRORS_HPP
#define IZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace izeta {

// Denominator 2^s - 2 within pole tolerance of zero.
class PoleError : public std::domain_error {
public:
  explicit PoleError(const std::string& msg) : std::domain_error(msg) {}
};

// Quadrature level-to-level difference failed to fall below tolerance.
class NonConvergence : public std::runtime_error {
public:
  explicit NonConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

// Series would need more terms than the hard cap allows.
class ToleranceUnreachable : public std::runtime_error {
public:
  explicit ToleranceUnreachable(const std::string& msg) : std::runtime_error(msg) {}
};

// A sampled inner-function value exceeded its declared decay envelope.
class EnvelopeViolation : public std::logic_error {
public:
  explicit EnvelopeViolation(const std::string& msg) : std::logic_error(msg) {}
};

// Richardson disagreement in a finite-difference derivative exceeded the
// requested derivative tolerance.
class StepTooLarge : public std::runtime_error {
public:
  explicit StepTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace izeta

#endif // IZETA_ERRORS_HPP
