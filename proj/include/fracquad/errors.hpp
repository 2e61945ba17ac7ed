#pragma once

#include <stdexcept>
#include <string>

namespace fracquad {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (gamma pole, e_{a,b}(0) with b < 1, bad sizes...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series or quadrature did not reach its tolerance within the iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A partial-fraction denominator or per-pole linear system is (numerically) singular.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Quadrature weights fail their order-condition residual check.
class WeightAccuracyError : public Error {
 public:
  using Error::Error;
};

/// A time stepper produced NaN/Inf.
class NonFiniteStateError : public Error {
 public:
  NonFiniteStateError(const std::string& what, long step)
      : Error(what + " (step " + std::to_string(step) + ")"), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

/// Invalid user configuration (CLI, test-problem catalog).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracquad
