#include "conevol/cone_cylinder.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "conevol/errors.hpp"
#include "conevol/quadrature.hpp"

namespace conevol::cone_cylinder {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kAlphaSlack = 8.0 * std::numeric_limits<double>::epsilon();

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be > 0");
}

VolumeResult integrate_scaled(const std::function<double(double)>& integrand, double lo,
                              double hi, double scale, double tol, long budget,
                              Method method) {
  VolumeResult out;
  out.method = method;
  if (scale == 0.0) return out;
  const auto q = oracle::integrate_adaptive(integrand, lo, hi, tol / scale, budget);
  out.volume = scale * q.value;
  out.error_estimate = scale * q.error_estimate;
  out.evaluations = q.evaluations;
  if (!q.converged) {
    throw QuadratureError(std::string(method_name(method)) + ": tolerance not reached",
                          out.volume, out.error_estimate, out.evaluations);
  }
  return out;
}

}  // namespace

void ConeCylinderParams::validate() const {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("cone-cylinder: k must lie in [0, 1], got " + std::to_string(k));
  }
  if (!(alpha >= kMinAlpha && alpha <= kHalfPi * (1.0 + kAlphaSlack))) {
    throw DomainError("cone-cylinder: alpha must lie in [1e-6, pi/2], got " +
                      std::to_string(alpha));
  }
}

ConeCylinderParams ConeCylinderParams::normalized() const {
  validate();
  return {k, std::min(alpha, kHalfPi)};
}

double cot_half_angle(double alpha) {
  if (alpha >= kHalfPi) return 0.0;
  return 1.0 / std::tan(alpha);
}

double radial_extent(const ConeCylinderParams& params, double phi) {
  const double k = params.k;
  const double c = std::cos(phi);
  const double one_minus_k2 = (1.0 - k) * (1.0 + k);
  // 1 - k^2 sin^2 = (1 - k^2) + k^2 cos^2 avoids cancellation at k = 1.
  const double root = std::sqrt(one_minus_k2 + k * k * c * c);
  const double kc = k * c;
  if (kc > 0.0) return one_minus_k2 / (root + kc);
  return root - kc;
}

VolumeResult volume_closed(const ConeCylinderParams& params, const elliptic::AgmConfig& cfg) {
  const auto p = params.normalized();
  const double cot = cot_half_angle(p.alpha);
  const double k2 = p.k * p.k;
  const elliptic::Modulus m(p.k);

  VolumeResult out;
  out.method = Method::closed_form;
  const double E = elliptic::complete_E(m, cfg);
  // (k^2 - 1) K(k) -> 0 as k -> 1.
  const double k_term = p.k == 1.0 ? 0.0 : 4.0 * (k2 - 1.0) * elliptic::complete_K(m, cfg);
  out.volume = 4.0 / 9.0 * cot * ((k2 + 7.0) * E + k_term);
  out.error_estimate = 4.0 / 9.0 * cot * ((k2 + 7.0) + 4.0 * (1.0 - k2)) * cfg.tolerance;
  out.evaluations = 1;
  return out;
}

VolumeResult volume_quad_r3(const ConeCylinderParams& params, double tol, long budget) {
  const auto p = params.normalized();
  require_tolerance(tol);
  const double scale = 2.0 * cot_half_angle(p.alpha) / 3.0;
  const auto r_cubed = [&p](double phi) {
    const double r = radial_extent(p, phi);
    return r * r * r;
  };
  return integrate_scaled(r_cubed, 0.0, std::numbers::pi, scale, tol, budget,
                          Method::quad_r3);
}

VolumeResult volume_quad_reduced(const ConeCylinderParams& params, double tol, long budget) {
  const auto p = params.normalized();
  require_tolerance(tol);
  const double scale = 4.0 * cot_half_angle(p.alpha) / 3.0;
  const double k2 = p.k * p.k;
  const auto reduced = [k2](double phi) {
    const double s2 = std::sin(phi) * std::sin(phi);
    return (3.0 * k2 + 1.0 - 4.0 * k2 * s2) * std::sqrt(1.0 - k2 * s2);
  };
  return integrate_scaled(reduced, 0.0, kHalfPi, scale, tol, budget, Method::quad_reduced);
}

double odd_terms_vanish_check(const ConeCylinderParams& params, double tol) {
  const auto p = params.normalized();
  require_tolerance(tol);
  if (p.k == 0.0) return 0.0;
  const double k = p.k;
  const auto odd = [k](double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return -k * k * k * c * c * c - 3.0 * k * c + 3.0 * k * k * k * c * s * s;
  };
  return oracle::integrate_adaptive(odd, 0.0, std::numbers::pi, tol).value;
}

}  // namespace conevol::cone_cylinder
