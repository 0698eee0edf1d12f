#pragma once

#include <stdexcept>
#include <string>

namespace gzk {

/// Bad arguments or inadmissible parameters (CLI exit status 2).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical guard tripped: boundary-tail mass, non-finite values,
/// Picard non-convergence, stepper blow-up (CLI exit status 3).
class NumericalGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TailViolation : public NumericalGuardError {
 public:
  TailViolation(const std::string& what, double fraction)
      : NumericalGuardError(what), fraction_(fraction) {}
  double fraction() const noexcept { return fraction_; }

 private:
  double fraction_;
};

class NonConvergence : public NumericalGuardError {
 public:
  using NumericalGuardError::NumericalGuardError;
};

}  // namespace gzk
