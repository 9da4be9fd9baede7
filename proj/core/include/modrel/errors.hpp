#pragma once

#include <stdexcept>
#include <string>

namespace modrel {

// Numerical failure, as opposed to a domain/usage error: a requested
// tolerance could not be met, a quadrature budget ran out, or an integrand
// stopped behaving the way its decay hint promised.
class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Carries the best value obtained so far together with its error estimate.
class ToleranceError : public NumericsError {
 public:
  ToleranceError(const std::string& what, double best, double err)
      : NumericsError(what), best_value(best), err_estimate(err) {}
  double best_value;
  double err_estimate;
};

class DepthExhaustedError : public ToleranceError {
 public:
  using ToleranceError::ToleranceError;
};

class HintViolationError : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class NonAlternatingError : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

}  // namespace modrel
