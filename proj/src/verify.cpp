#include "conevol/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <utility>

#include "conevol/cone_cylinder.hpp"
#include "conevol/cone_sphere.hpp"
#include "conevol/monte_carlo.hpp"
#include "conevol/quadrature.hpp"

namespace conevol::cli {

namespace {

constexpr double kPi = std::numbers::pi;

using cone_cylinder::ConeCylinderParams;
using cone_sphere::ConeSphereParams;

// Tracks the worst deviation seen by one check.
class Check {
 public:
  Check(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

  void observe(double deviation) {
    if (std::isnan(deviation)) {
      failed_ = true;
      return;
    }
    worst_ = std::max(worst_, deviation);
  }

  CheckOutcome finish() const {
    return {name_, worst_, tolerance_, !failed_ && worst_ <= tolerance_};
  }

 private:
  std::string name_;
  double tolerance_;
  double worst_ = 0.0;
  bool failed_ = false;
};

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(i + 1 == count ? hi : lo + (hi - lo) * i / (count - 1));
  }
  return out;
}

// Deterministic (k, alpha) draws: k in [k_lo, 1], alpha in [pi/12, 5pi/12].
std::vector<std::pair<double, double>> draw_pairs(std::uint64_t seed, int count, double k_lo) {
  const oracle::Box3 box{{k_lo, kPi / 12, 0.0}, {1.0, 5 * kPi / 12, 1.0}};
  std::vector<std::pair<double, double>> out;
  for (int i = 0; i < count; ++i) {
    const auto p = oracle::sample_point(box, seed, static_cast<std::uint64_t>(i));
    out.emplace_back(p.x, p.y);
  }
  return out;
}

// Closed form rebuilt from E and E2: V = (4/3) cot [(3k^2 + 1) E - 4k^2 E2].
double cone_cylinder_via_e2(const ConeCylinderParams& p, const VerifyOptions& opts) {
  const double cot = cone_cylinder::cot_half_angle(p.alpha);
  const elliptic::Modulus m(p.k);
  const double k2 = p.k * p.k;
  return 4.0 / 3.0 * cot * ((3.0 * k2 + 1.0) * elliptic::complete_E(m) - 4.0 * k2 * opts.e2(m));
}

}  // namespace

std::vector<CheckOutcome> run_verification(const VerifyOptions& opts) {
  std::vector<CheckOutcome> results;
  const double tol = 1e-10;

  const std::vector<double> cc_k = opts.fast ? linspace(0.0, 1.0, 5) : linspace(0.0, 1.0, 11);
  const std::vector<double> cc_alpha =
      opts.fast ? std::vector<double>{kPi / 6, kPi / 3, kPi / 2}
                : std::vector<double>{kPi / 12, kPi / 6, kPi / 4, kPi / 3, 5 * kPi / 12, kPi / 2};
  const std::vector<double> cs_k =
      opts.fast ? std::vector<double>{0.0, 0.4, 0.8} : std::vector<double>{0.0, 0.2, 0.4, 0.6, 0.8};
  const std::vector<double> cs_alpha =
      opts.fast ? std::vector<double>{kPi / 6, kPi / 2}
                : std::vector<double>{kPi / 12, kPi / 6, kPi / 4, kPi / 3, kPi / 2};
  const long mc_samples = opts.fast ? 1'000'000 : 10'000'000;
  const int mc_pairs = opts.fast ? 2 : 5;
  const int random_draws = opts.fast ? 4 : 10;

  {
    Check ladder("cone_cylinder.method_ladder", 1e-8);
    Check flat("cone_cylinder.flat_cone_zero", 0.0);
    for (double k : cc_k) {
      for (double alpha : cc_alpha) {
        const ConeCylinderParams p{k, alpha};
        const double closed = cone_cylinder::volume_closed(p).volume;
        const double r3 = cone_cylinder::volume_quad_r3(p, tol).volume;
        const double reduced = cone_cylinder::volume_quad_reduced(p, tol).volume;
        const double via_e2 = cone_cylinder_via_e2(p, opts);
        const double routes[] = {closed, r3, reduced, via_e2};
        for (double a : routes) {
          for (double b : routes) ladder.observe(std::abs(a - b));
        }
        if (alpha == kPi / 2) flat.observe(std::abs(closed));
      }
    }
    results.push_back(ladder.finish());
    results.push_back(flat.finish());
  }

  {
    Check k0("cone_cylinder.k0_limit", 1e-12);
    Check k1("cone_cylinder.k1_limit", 1e-9);
    for (double alpha : cc_alpha) {
      const double expected = 2.0 * kPi / 3.0 * cone_cylinder::cot_half_angle(alpha);
      k0.observe(std::abs(cone_cylinder::volume_closed({0.0, alpha}).volume - expected));
      const ConeCylinderParams p1{1.0, alpha};
      k1.observe(std::abs(cone_cylinder::volume_closed(p1).volume -
                          cone_cylinder::volume_quad_r3(p1, tol).volume));
    }
    results.push_back(k0.finish());
    results.push_back(k1.finish());
  }

  {
    Check e2_check("elliptic.e2_vs_quadrature", 1e-11);
    for (double m : {0.0, 0.01, 0.1, 0.5, 0.9, 0.999, 1.0}) {
      const auto direct = oracle::integrate_adaptive(
          [m](double t) {
            const double s2 = std::sin(t) * std::sin(t);
            return s2 * std::sqrt(1.0 - m * m * s2);
          },
          0.0, kPi / 2, 1e-14);
      e2_check.observe(std::abs(elliptic::e2(elliptic::Modulus(m)) - direct.value));
    }
    results.push_back(e2_check.finish());

    Check kernel("elliptic.agm_vs_quadrature", 1e-11);
    const int count = opts.fast ? 50 : 200;
    for (double m : linspace(0.0, 0.999, count)) {
      const double m2 = m * m;
      const auto qk = oracle::integrate_adaptive(
          [m2](double t) { return 1.0 / std::sqrt(1.0 - m2 * std::sin(t) * std::sin(t)); }, 0.0,
          kPi / 2, 1e-13);
      const auto qe = oracle::integrate_adaptive(
          [m2](double t) { return std::sqrt(1.0 - m2 * std::sin(t) * std::sin(t)); }, 0.0,
          kPi / 2, 1e-13);
      const elliptic::Modulus mod(m);
      kernel.observe(std::abs(elliptic::complete_K(mod) - qk.value));
      kernel.observe(std::abs(elliptic::complete_E(mod) - qe.value));
    }
    results.push_back(kernel.finish());
  }

  {
    Check cc_odd("cone_cylinder.odd_terms_vanish", 1e-12);
    Check cs_odd("cone_sphere.odd_theta_terms_vanish", 1e-12);
    const auto draws = draw_pairs(opts.seed + 1000, random_draws, 0.0);
    for (const auto& [k, alpha] : draws) {
      cc_odd.observe(std::abs(cone_cylinder::odd_terms_vanish_check({k, alpha})));
      cs_odd.observe(std::abs(cone_sphere::odd_theta_terms_vanish_check({k, alpha}, alpha / 2)));
    }
    results.push_back(cc_odd.finish());
    results.push_back(cs_odd.finish());
  }

  {
    Check series("cone_sphere.series_vs_semi_analytic", 1e-7);
    Check quad2d("cone_sphere.semi_analytic_vs_quad_2d", 1e-7);
    for (double k : cs_k) {
      for (double alpha : cs_alpha) {
        const ConeSphereParams p{k, alpha};
        const double semi = cone_sphere::volume_semi_analytic(p, tol).volume;
        series.observe(std::abs(cone_sphere::volume_series(p, 1e-12, 64).result.volume - semi));
        quad2d.observe(std::abs(cone_sphere::volume_quad_2d(p, tol).volume - semi));
      }
    }
    results.push_back(series.finish());
    results.push_back(quad2d.finish());
  }

  {
    Check limit("cone_sphere.k0_limit", 1e-9);
    for (double alpha : cs_alpha) {
      const double v = cone_sphere::volume_series({1e-8, alpha}, 1e-12, 64).result.volume;
      limit.observe(std::abs(v - 2.0 * kPi / 3.0 * (1.0 - std::cos(alpha))));
    }
    results.push_back(limit.finish());

    Check zeroth("cone_sphere.zeroth_term_closed_form", 1e-10);
    for (const auto& [k, alpha] : draw_pairs(opts.seed + 2000, random_draws, 0.05)) {
      const ConeSphereParams p{k, alpha};
      zeroth.observe(
          std::abs(cone_sphere::zeroth_order_approx(p) - cone_sphere::series_term(p, 0, 1e-13)));
    }
    results.push_back(zeroth.finish());

    // |V - T0| / k^2 should level off as k -> 0.
    std::vector<double> ratios;
    for (double k : {0.2, 0.1, 0.05, 0.025}) {
      const ConeSphereParams p{k, kPi / 4};
      const double v = cone_sphere::volume_semi_analytic(p, 1e-13).volume;
      ratios.push_back(std::abs(v - cone_sphere::zeroth_order_approx(p)) / (k * k));
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    Check order("cone_sphere.zeroth_error_ratio_spread", 2.0);
    order.observe(*lo > 0.0 ? *hi / *lo : std::nan(""));
    results.push_back(order.finish());

    Check half_ball("cone_sphere.half_ball_invariance", 1e-7);
    for (double k : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      half_ball.observe(
          std::abs(cone_sphere::volume_semi_analytic({k, kPi / 2}, tol).volume - 2 * kPi / 3));
    }
    results.push_back(half_ball.finish());
  }

  {
    // Reported deviation is the largest |analytic - mc| / std_error.
    Check cc_mc("cone_cylinder.monte_carlo_z", 3.0);
    Check cs_mc("cone_sphere.monte_carlo_z", 3.0);
    const auto cc_pairs = draw_pairs(opts.seed, mc_pairs, 0.0);
    const auto cs_pairs = draw_pairs(opts.seed + 1, mc_pairs, 0.0);
    for (int i = 0; i < mc_pairs; ++i) {
      const ConeCylinderParams pa{cc_pairs[i].first, cc_pairs[i].second};
      const auto mca = oracle::mc_volume(pa, mc_samples, opts.seed + i);
      cc_mc.observe(std::abs(cone_cylinder::volume_closed(pa).volume - mca.mean) / mca.std_error);

      const ConeSphereParams pb{cs_pairs[i].first, cs_pairs[i].second};
      const auto mcb = oracle::mc_volume(pb, mc_samples, opts.seed + i);
      cs_mc.observe(std::abs(cone_sphere::volume_semi_analytic(pb, tol).volume - mcb.mean) /
                    mcb.std_error);
    }
    results.push_back(cc_mc.finish());
    results.push_back(cs_mc.finish());
  }

  return results;
}

void print_verification_table(std::ostream& out, const std::vector<CheckOutcome>& checks) {
  char line[160];
  std::snprintf(line, sizeof line, "%-42s %14s %10s  %s\n", "check", "max_deviation",
                "tolerance", "status");
  out << line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-42s %14.6e %10.1e  %s\n", c.name.c_str(),
                  c.max_deviation, c.tolerance, c.passed ? "PASS" : "FAIL");
    out << line;
  }
}

}  // namespace conevol::cli
