#pragma once

// Volume inside the unit cylinder x^2 + y^2 = 1, above z = 0 and under the
// cone z = cot(alpha) sqrt((x - k)^2 + y^2) whose vertex T = (k, 0, 0) sits
// on the base plane inside the cylinder.

#include "conevol/elliptic.hpp"
#include "conevol/volume.hpp"

namespace conevol::cone_cylinder {

struct ConeCylinderParams {
  double k = 0.0;      // vertex offset along x, in [0, 1]
  double alpha = 0.0;  // half-angle in radians, in [kMinAlpha, pi/2]

  /// Throws DomainError when out of range. Half-angles within a few ulp
  /// above pi/2 are accepted and clamped.
  void validate() const;
  /// Validated copy with alpha clamped to pi/2.
  ConeCylinderParams normalized() const;
};

/// cot(alpha), exactly 0 at alpha = pi/2.
double cot_half_angle(double alpha);

/// Distance from T to the unit circle along direction phi:
/// R(phi) = sqrt(1 - k^2 sin^2 phi) - k cos phi.
double radial_extent(const ConeCylinderParams& params, double phi);

/// V = (4/9) cot(alpha) [(k^2 + 7) E(k) + 4 (k^2 - 1) K(k)], with the K-term
/// taken as its limit 0 at k = 1.
VolumeResult volume_closed(const ConeCylinderParams& params,
                           const elliptic::AgmConfig& cfg = {});

/// V = (2 cot(alpha) / 3) int_0^pi R^3 dphi by adaptive quadrature.
/// Throws QuadratureError if tol is not reached within budget.
VolumeResult volume_quad_r3(const ConeCylinderParams& params, double tol = kDefaultTolerance,
                            long budget = 1'000'000);

/// V = (4 cot(alpha) / 3) int_0^{pi/2} (3k^2 + 1 - 4k^2 sin^2 phi)
///     sqrt(1 - k^2 sin^2 phi) dphi by adaptive quadrature.
VolumeResult volume_quad_reduced(const ConeCylinderParams& params,
                                 double tol = kDefaultTolerance, long budget = 1'000'000);

/// Quadrature of the part of R^3 that is odd about phi = pi/2,
/// -k^3 cos^3 + -3k cos + 3k^3 cos sin^2, over [0, pi]. Should vanish.
double odd_terms_vanish_check(const ConeCylinderParams& params, double tol = 1e-13);

}  // namespace conevol::cone_cylinder
