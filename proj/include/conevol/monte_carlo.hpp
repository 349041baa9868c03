#pragma once

#include <cstdint>
#include <functional>

#include "conevol/regions.hpp"

namespace conevol::oracle {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
  double bounding_volume = 0.0;
};

using PointPredicate = std::function<bool(const Point3&)>;

/// Point i (0-based) of the stream keyed by seed, uniform in box. Pure function
/// of (box, seed, i).
Point3 sample_point(const Box3& box, std::uint64_t seed, std::uint64_t index);

/// Hit-or-miss volume estimate of {p in box : inside(p)} from n uniform points.
///
/// Samples are drawn from a counter-based stream indexed by (seed, i), and
/// the work is sharded over `workers` threads (0 = hardware concurrency).
/// Hits are counted exactly, so the estimate is bit-identical for any
/// worker count. std_error = V_box sqrt(p (1 - p) / n).
McEstimate mc_volume(const PointPredicate& inside, const Box3& box, long n, std::uint64_t seed,
                     unsigned workers = 0);

McEstimate mc_volume(const cone_cylinder::ConeCylinderParams& params, long n,
                     std::uint64_t seed, unsigned workers = 0);
McEstimate mc_volume(const cone_sphere::ConeSphereParams& params, long n, std::uint64_t seed,
                     unsigned workers = 0);

}  // namespace conevol::oracle
