#pragma once

#include <stdexcept>
#include <string>

namespace ccfix {

/// Base class for all ccfix errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two points closer than the collision tolerance (relative to the
/// configuration diameter).
class CollisionError : public Error {
 public:
  using Error::Error;
};

/// Input is degenerate for the requested operation (zero vector after
/// centering, rank loss, degenerate critical point, ...).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Ordering constraint violated (non-monotone coordinates, wall pair not
/// adjacent in the given component, parameter on a wall, ...).
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// Malformed arguments: inconsistent sizes, non-positive masses,
/// out-of-range options.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Iteration budget exhausted before reaching the requested tolerance.
/// Carries the best residual seen so the caller can triage.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double best_residual)
      : Error(msg), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

/// Numerical breakdown inside a kernel (simplex pivot cap, lost identity).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccfix
