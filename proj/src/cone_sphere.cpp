#include "conevol/cone_sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "conevol/errors.hpp"
#include "conevol/quadrature.hpp"

namespace conevol::cone_sphere {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
constexpr double kAlphaSlack = 8.0 * std::numeric_limits<double>::epsilon();

// Below this the (asin k - asin(k c)) / k factor uses its Taylor expansion.
constexpr double kZerothSmallK = 1e-8;

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be > 0");
}

// 1 - k^2 cos^2 phi, written to stay accurate when k is near 1.
double radial_discriminant(double k, double phi) {
  const double s = std::sin(phi);
  return (1.0 - k) * (1.0 + k) + k * k * s * s;
}

[[noreturn]] void throw_unconverged(Method method, double value, double error, long evals) {
  throw QuadratureError(std::string(method_name(method)) + ": tolerance not reached", value,
                        error, evals);
}

}  // namespace

void ConeSphereParams::validate() const {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("cone-sphere: k must lie in [0, 1], got " + std::to_string(k));
  }
  if (!(alpha >= kMinAlpha && alpha <= kHalfPi * (1.0 + kAlphaSlack))) {
    throw DomainError("cone-sphere: alpha must lie in [1e-6, pi/2], got " +
                      std::to_string(alpha));
  }
}

ConeSphereParams ConeSphereParams::normalized() const {
  validate();
  return {k, std::min(alpha, kHalfPi)};
}

elliptic::Modulus modulus_profile(const ConeSphereParams& params, double phi) {
  const auto p = params.normalized();
  if (!(phi >= 0.0 && phi <= p.alpha * (1.0 + kAlphaSlack))) {
    throw DomainError("modulus_profile: phi must lie in [0, alpha]");
  }
  const double s = std::sin(phi);
  if (s == 0.0 || p.k == 0.0) return elliptic::Modulus(0.0);
  const double kappa = p.k * s / std::sqrt(radial_discriminant(p.k, phi));
  return elliptic::Modulus(std::min(kappa, p.k));
}

double rho_max(const ConeSphereParams& params, double theta, double phi) {
  const auto p = params.normalized();
  const double b = p.k * std::cos(theta) * std::sin(phi);
  const double one_minus_k2 = (1.0 - p.k) * (1.0 + p.k);
  const double root = std::sqrt(b * b + one_minus_k2);
  if (b > 0.0) return one_minus_k2 / (root + b);
  return root - b;
}

VolumeResult volume_semi_analytic(const ConeSphereParams& params, double tol, long budget) {
  const auto p = params.normalized();
  require_tolerance(tol);
  const double k = p.k;
  const double k2 = k * k;
  const double one_minus_k2 = (1.0 - k) * (1.0 + k);
  const elliptic::AgmConfig agm;

  const auto integrand = [&](double phi) {
    const double s = std::sin(phi);
    const double root_d = std::sqrt(radial_discriminant(k, phi));
    const double kappa = k == 0.0 ? 0.0 : std::min(k * s / root_d, k);
    const elliptic::Modulus m(kappa);
    const auto [K, E] = elliptic::complete_KE(m, agm);
    const double e_part = 4.0 / 9.0 * (8.0 * k2 * s * s * s + 7.0 * one_minus_k2 * s) * E;
    // (1 - k^2) K(kappa) -> 0 as k -> 1, where kappa is pinned at 1.
    const double k_part =
        (one_minus_k2 == 0.0 || kappa >= 1.0) ? 0.0 : 16.0 / 9.0 * one_minus_k2 * s * K;
    return root_d * (e_part - k_part);
  };

  const auto q = oracle::integrate_adaptive(integrand, 0.0, p.alpha, tol, budget);
  VolumeResult out;
  out.method = Method::semi_analytic;
  out.volume = q.value;
  out.error_estimate = q.error_estimate + 8.0 * p.alpha * agm.tolerance;
  out.evaluations = q.evaluations;
  if (!q.converged) throw_unconverged(out.method, out.volume, out.error_estimate, q.evaluations);
  return out;
}

VolumeResult volume_quad_2d(const ConeSphereParams& params, double tol, long budget) {
  const auto p = params.normalized();
  require_tolerance(tol);
  const double k2 = p.k * p.k;
  const double one_minus_k2 = (1.0 - p.k) * (1.0 + p.k);

  // Outer and inner passes split the tolerance so the combined bound stays below tol.
  const double inner_tol = 0.25 * tol / p.alpha;
  long inner_evaluations = 0;
  double worst_inner_error = 0.0;
  bool inner_ok = true;

  const auto inner = [&](double phi) {
    const double s = std::sin(phi);
    const double s2 = s * s;
    const auto integrand = [&](double theta) {
      const double c = std::cos(theta);
      return (16.0 / 3.0 * k2 * c * c * s2 * s + 4.0 / 3.0 * one_minus_k2 * s) *
             std::sqrt(one_minus_k2 + k2 * c * c * s2);
    };
    const auto q = oracle::integrate_adaptive(integrand, 0.0, kHalfPi, inner_tol, budget);
    inner_evaluations += q.evaluations;
    worst_inner_error = std::max(worst_inner_error, q.error_estimate);
    inner_ok = inner_ok && q.converged;
    return q.value;
  };

  const auto q = oracle::integrate_adaptive(inner, 0.0, p.alpha, 0.5 * tol, budget);
  VolumeResult out;
  out.method = Method::quad_2d;
  out.volume = q.value;
  out.error_estimate = q.error_estimate + p.alpha * worst_inner_error;
  out.evaluations = inner_evaluations;
  if (!q.converged || !inner_ok || out.error_estimate > tol) {
    throw_unconverged(out.method, out.volume, out.error_estimate, out.evaluations);
  }
  return out;
}

SeriesTerm series_term_detail(const ConeSphereParams& params, int n, double tol, long budget) {
  const auto p = params.normalized();
  require_tolerance(tol);
  if (n < 0) throw DomainError("series_term: n must be >= 0");
  SeriesTerm out;
  if (n > 0 && p.k == 0.0) return out;

  const double k = p.k;
  const double k2 = k * k;
  const double one_minus_k2 = (1.0 - k) * (1.0 + k);
  const double linear_coeff = one_minus_k2 * (3.0 + 8.0 * n);
  const double prefactor =
      2.0 * kPi / 9.0 * elliptic::series_coefficient(n) / (1.0 - 2.0 * n);

  const auto integrand = [=](double phi) {
    const double s = std::sin(phi);
    const double d = radial_discriminant(k, phi);
    // kappa^2 = k^2 sin^2 / D stays in [0, 1], so the power cannot overflow.
    const double kappa2 = n == 0 ? 1.0 : std::min(k2 * s * s / d, 1.0);
    return (8.0 * k2 * s * s * s + linear_coeff * s) * std::sqrt(d) * std::pow(kappa2, n);
  };

  const double scale = std::abs(prefactor);
  const auto q = oracle::integrate_adaptive(integrand, 0.0, p.alpha, tol / scale, budget);
  out.value = prefactor * q.value;
  out.error_estimate = scale * q.error_estimate;
  out.evaluations = q.evaluations;
  if (!q.converged) {
    throw_unconverged(Method::series, out.value, out.error_estimate, out.evaluations);
  }
  return out;
}

SeriesOutcome volume_series(const ConeSphereParams& params, double term_tol, int n_max) {
  const auto p = params.normalized();
  require_tolerance(term_tol);
  if (n_max < 1) throw DomainError("volume_series: n_max must be >= 1");

  SeriesOutcome out;
  out.result.method = Method::series;
  auto& bd = out.breakdown;
  double sum = 0.0;
  double quad_error = 0.0;
  bool small_term = false;
  for (int n = 0; n < n_max; ++n) {
    const auto term = series_term_detail(p, n, term_tol);
    sum += term.value;
    quad_error += term.error_estimate;
    out.result.evaluations += term.evaluations;
    bd.terms.push_back(term.value);
    bd.partial_sums.push_back(sum);
    // At k = 0 every term past T_0 carries k^{2n} and vanishes identically.
    if (std::abs(term.value) < term_tol || p.k == 0.0) {
      small_term = true;
      break;
    }
  }
  bd.n_used = static_cast<int>(bd.terms.size());
  bd.truncation_estimate = std::abs(bd.terms.back());
  out.truncated = !small_term;
  out.result.volume = sum;
  out.result.error_estimate = bd.truncation_estimate + quad_error;
  return out;
}

double zeroth_order_approx(const ConeSphereParams& params) {
  const auto p = params.normalized();
  const double k = p.k;
  const double k2 = k * k;
  const double c = std::cos(p.alpha);
  double arc_ratio;
  if (k < kZerothSmallK) {
    arc_ratio = (1.0 - c) + k2 * (1.0 - c * c * c) / 6.0;
  } else {
    arc_ratio = (std::asin(k) - std::asin(k * c)) / k;
  }
  const double one_minus_k2 = (1.0 - k) * (1.0 + k);
  return kPi / 9.0 *
         ((5.0 + k2) * std::sqrt(one_minus_k2) -
          (5.0 + 5.0 * k2 - 4.0 * k2 * c * c) * c * std::sqrt(1.0 - k2 * c * c) +
          (1.0 + 5.0 * k2) * arc_ratio);
}

double odd_theta_terms_vanish_check(const ConeSphereParams& params, double phi, double tol) {
  const auto p = params.normalized();
  require_tolerance(tol);
  if (!(phi >= 0.0 && phi <= p.alpha * (1.0 + kAlphaSlack))) {
    throw DomainError("odd_theta_terms_vanish_check: phi must lie in [0, alpha]");
  }
  if (p.k == 0.0) return 0.0;
  const double k = p.k;
  const double s2 = std::sin(phi) * std::sin(phi);
  const auto odd = [=](double theta) {
    const double c = std::cos(theta);
    return k * k * k * c * s2 - k * c * s2 - 4.0 / 3.0 * k * k * k * c * c * c * s2 * s2;
  };
  return oracle::integrate_adaptive(odd, 0.0, 2.0 * kPi, tol).value;
}

}  // namespace conevol::cone_sphere
