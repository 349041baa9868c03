#pragma once

#include <functional>

namespace conevol::oracle {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

inline constexpr long kDefaultQuadratureBudget = 1'000'000;

/// Globally adaptive 7-point Gauss / 15-point Kronrod quadrature of f over
/// [a, b]. The subinterval with the largest |K15 - G7| is bisected until the
/// summed estimate drops to tol or the next split would exceed budget
/// integrand calls. Budget exhaustion is reported through converged = false.
///
/// Nodes are strictly interior, so integrable endpoint singularities are
/// never evaluated. Exact (up to rounding) for polynomials of degree <= 13.
///
/// Throws DomainError if a > b, tol <= 0 or budget < 15.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double tol,
                                    long budget = kDefaultQuadratureBudget);

}  // namespace conevol::oracle
