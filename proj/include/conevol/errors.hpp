#pragma once

#include <stdexcept>
#include <string>

namespace conevol {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative kernel did not settle within its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature ran out of budget before meeting its tolerance.
/// Carries the best estimate reached so callers can still report it.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double value, double error_estimate,
                  long evaluations)
      : std::runtime_error(what),
        value_(value),
        error_estimate_(error_estimate),
        evaluations_(evaluations) {}

  double value() const noexcept { return value_; }
  double error_estimate() const noexcept { return error_estimate_; }
  long evaluations() const noexcept { return evaluations_; }

 private:
  double value_;
  double error_estimate_;
  long evaluations_;
};

}  // namespace conevol
