#pragma once

// Volume of the part of the offset unit sphere (x + k)^2 + y^2 + z^2 = 1 that
// lies inside the upright cone z = cot(alpha) sqrt(x^2 + y^2), apex at the
// origin. In spherical coordinates (rho, theta, phi) about the apex this is
// 0 <= phi <= alpha, 0 <= rho <= rho_max(theta, phi).

#include <vector>

#include "conevol/elliptic.hpp"
#include "conevol/volume.hpp"

namespace conevol::cone_sphere {

struct ConeSphereParams {
  double k = 0.0;      // sphere centre is (-k, 0, 0), k in [0, 1]
  double alpha = 0.0;  // cone half-angle in radians, in [kMinAlpha, pi/2]

  void validate() const;
  ConeSphereParams normalized() const;
};

/// Composite modulus k sin(phi) / sqrt(1 - k^2 cos^2 phi), in [0, k].
/// Requires 0 <= phi <= alpha.
elliptic::Modulus modulus_profile(const ConeSphereParams& params, double phi);

/// Positive root of rho^2 + 2k rho cos(theta) sin(phi) + k^2 - 1 = 0.
double rho_max(const ConeSphereParams& params, double theta, double phi);

/// One-dimensional reduction over phi with E and K of the composite modulus
/// evaluated by AGM at each node:
///   V = (4/9) int (8k^2 sin^3 + 7(1-k^2) sin) sqrt(D) E(kappa) dphi
///     - (16/9)(1-k^2) int sin sqrt(D) K(kappa) dphi,   D = 1 - k^2 cos^2 phi.
/// At k = 1 the composite modulus is identically 1 and the second integral
/// is dropped as its limit 0.
VolumeResult volume_semi_analytic(const ConeSphereParams& params,
                                  double tol = kDefaultTolerance, long budget = 1'000'000);

/// Nested quadrature (theta inner over [0, pi/2], phi outer over [0, alpha]) of
/// ((16/3) k^2 cos^2 theta sin^3 phi + (4/3)(1 - k^2) sin phi)
///   * sqrt(1 - k^2 + k^2 cos^2 theta sin^2 phi).
/// The budget applies to each one-dimensional pass.
VolumeResult volume_quad_2d(const ConeSphereParams& params, double tol = kDefaultTolerance,
                            long budget = 1'000'000);

struct SeriesTerm {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// n-th term of the Maclaurin expansion of the semi-analytic form:
///   T_n = (2pi/9) c_n / (1 - 2n)
///         int_0^alpha [8k^2 sin^3 + (1-k^2)(3+8n) sin] sqrt(D) kappa(phi)^{2n} dphi
/// where kappa^{2n} = k^{2n} sin^{2n} / D^n. The integral is taken to tol on
/// the term itself. Throws QuadratureError on budget exhaustion.
SeriesTerm series_term_detail(const ConeSphereParams& params, int n, double tol,
                              long budget = 1'000'000);

inline double series_term(const ConeSphereParams& params, int n, double tol) {
  return series_term_detail(params, n, tol).value;
}

struct SeriesBreakdown {
  std::vector<double> terms;
  std::vector<double> partial_sums;
  double truncation_estimate = 0.0;
  int n_used = 0;
};

struct SeriesOutcome {
  VolumeResult result;
  SeriesBreakdown breakdown;
  /// n_max terms were summed without one dropping below term_tol.
  bool truncated = false;
};

inline constexpr int kDefaultSeriesTerms = 64;

/// Sums T_0, T_1, ... until |T_n| < term_tol (that term included) or n_max
/// terms have been used. Each term's integral is taken to term_tol.
SeriesOutcome volume_series(const ConeSphereParams& params, double term_tol = 1e-12,
                            int n_max = kDefaultSeriesTerms);

/// Closed form of T_0:
///   (pi/9) [ (5 + k^2) sqrt(1 - k^2)
///          - (5 + 5k^2 - 4k^2 cos^2 a) cos a sqrt(1 - k^2 cos^2 a)
///          + (1 + 5k^2) (asin k - asin(k cos a)) / k ].
/// Tends to (2pi/3)(1 - cos a) as k -> 0.
double zeroth_order_approx(const ConeSphereParams& params);

/// Quadrature over theta in [0, 2pi] of the theta-odd part of rho_max^3 sin(phi) / 3,
///   k^3 cos t sin^2 phi - k cos t sin^2 phi - (4/3) k^3 cos^3 t sin^4 phi.
/// Should vanish.
double odd_theta_terms_vanish_check(const ConeSphereParams& params, double phi,
                                    double tol = 1e-13);

}  // namespace conevol::cone_sphere
