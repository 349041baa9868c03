#pragma once

#include "conevol/cone_cylinder.hpp"
#include "conevol/cone_sphere.hpp"

namespace conevol::oracle {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct Box3 {
  Point3 lo;
  Point3 hi;

  double volume() const { return (hi.x - lo.x) * (hi.y - lo.y) * (hi.z - lo.z); }
};

/// x^2 + y^2 <= 1, z >= 0 and z <= cot(alpha) sqrt((x - k)^2 + y^2).
bool in_cone_cylinder_region(const Point3& p, const cone_cylinder::ConeCylinderParams& params);

/// (x + k)^2 + y^2 + z^2 <= 1 and z >= cot(alpha) sqrt(x^2 + y^2).
bool in_cone_sphere_region(const Point3& p, const cone_sphere::ConeSphereParams& params);

/// [-1, 1]^2 x [0, cot(alpha)(1 + k)]: the cone's height over the disk peaks at 1 + k.
Box3 canonical_box(const cone_cylinder::ConeCylinderParams& params);

/// [-1 - k, 1 - k] x [-1, 1] x [0, 1].
Box3 canonical_box(const cone_sphere::ConeSphereParams& params);

}  // namespace conevol::oracle
