#include "conevol/regions.hpp"

#include <cmath>

namespace conevol::oracle {

bool in_cone_cylinder_region(const Point3& p, const cone_cylinder::ConeCylinderParams& params) {
  const auto q = params.normalized();
  if (p.x * p.x + p.y * p.y > 1.0 || p.z < 0.0) return false;
  const double dx = p.x - q.k;
  return p.z <= cone_cylinder::cot_half_angle(q.alpha) * std::sqrt(dx * dx + p.y * p.y);
}

bool in_cone_sphere_region(const Point3& p, const cone_sphere::ConeSphereParams& params) {
  const auto q = params.normalized();
  const double dx = p.x + q.k;
  if (dx * dx + p.y * p.y + p.z * p.z > 1.0 || p.z < 0.0) return false;
  return p.z >= cone_cylinder::cot_half_angle(q.alpha) * std::sqrt(p.x * p.x + p.y * p.y);
}

Box3 canonical_box(const cone_cylinder::ConeCylinderParams& params) {
  const auto q = params.normalized();
  return {{-1.0, -1.0, 0.0}, {1.0, 1.0, cone_cylinder::cot_half_angle(q.alpha) * (1.0 + q.k)}};
}

Box3 canonical_box(const cone_sphere::ConeSphereParams& params) {
  const auto q = params.normalized();
  return {{-1.0 - q.k, -1.0, 0.0}, {1.0 - q.k, 1.0, 1.0}};
}

}  // namespace conevol::oracle
