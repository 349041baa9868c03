#include "conevol/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "conevol/errors.hpp"
#include "conevol/philox.hpp"

namespace conevol::oracle {

namespace {

long count_hits(const PointPredicate& inside, const Box3& box, std::uint64_t seed,
                std::uint64_t begin, std::uint64_t end) {
  long hits = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    if (inside(sample_point(box, seed, i))) ++hits;
  }
  return hits;
}

}  // namespace

Point3 sample_point(const Box3& box, std::uint64_t seed, std::uint64_t index) {
  const Philox4x32 rng({static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
  const auto lo = static_cast<std::uint32_t>(index);
  const auto hi = static_cast<std::uint32_t>(index >> 32);
  const auto a = rng({lo, hi, 0, 0});
  const auto b = rng({lo, hi, 1, 0});
  const double u = unit_interval(a[0], a[1]);
  const double v = unit_interval(a[2], a[3]);
  const double w = unit_interval(b[0], b[1]);
  return {box.lo.x + u * (box.hi.x - box.lo.x), box.lo.y + v * (box.hi.y - box.lo.y),
          box.lo.z + w * (box.hi.z - box.lo.z)};
}

McEstimate mc_volume(const PointPredicate& inside, const Box3& box, long n, std::uint64_t seed,
                     unsigned workers) {
  if (n < 1) throw DomainError("mc_volume: n must be >= 1");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<long>(workers, n));

  const auto total = static_cast<std::uint64_t>(n);
  std::vector<long> hits(workers, 0);
  if (workers == 1) {
    hits[0] = count_hits(inside, box, seed, 0, total);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { hits[w] = count_hits(inside, box, seed, begin, end); });
    }
  }

  long hit_count = 0;
  for (long h : hits) hit_count += h;

  McEstimate out;
  out.samples = n;
  out.seed = seed;
  out.bounding_volume = box.volume();
  const double fraction = static_cast<double>(hit_count) / static_cast<double>(n);
  out.mean = out.bounding_volume * fraction;
  out.std_error = out.bounding_volume * std::sqrt(fraction * (1.0 - fraction) / n);
  return out;
}

McEstimate mc_volume(const cone_cylinder::ConeCylinderParams& params, long n,
                     std::uint64_t seed, unsigned workers) {
  const auto p = params.normalized();
  const auto inside = [&p](const Point3& q) { return in_cone_cylinder_region(q, p); };
  return mc_volume(inside, canonical_box(p), n, seed, workers);
}

McEstimate mc_volume(const cone_sphere::ConeSphereParams& params, long n, std::uint64_t seed,
                     unsigned workers) {
  const auto p = params.normalized();
  const auto inside = [&p](const Point3& q) { return in_cone_sphere_region(q, p); };
  return mc_volume(inside, canonical_box(p), n, seed, workers);
}

}  // namespace conevol::oracle
