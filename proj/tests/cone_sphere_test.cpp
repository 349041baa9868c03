#include "conevol/cone_sphere.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "conevol/errors.hpp"
#include "conevol/quadrature.hpp"

namespace {

namespace cs = conevol::cone_sphere;
using cs::ConeSphereParams;

constexpr double kPi = std::numbers::pi;
const std::vector<double> kAlphaGrid = {kPi / 12, kPi / 6, kPi / 4, kPi / 3, kPi / 2};

double cap_volume(double alpha) { return 2 * kPi / 3 * (1 - std::cos(alpha)); }

// Volume straight from spherical coordinates: int int rho_max^3 / 3 sin(phi)
// over theta in [0, 2pi], phi in [0, alpha], without any symmetry reduction.
double raw_spherical_volume(const ConeSphereParams& p) {
  const auto outer = [&p](double phi) {
    const auto inner = [&p, phi](double theta) {
      const double r = cs::rho_max(p, theta, phi);
      return r * r * r / 3.0 * std::sin(phi);
    };
    return conevol::oracle::integrate_adaptive(inner, 0.0, 2 * kPi, 1e-13).value;
  };
  return conevol::oracle::integrate_adaptive(outer, 0.0, p.alpha, 1e-11).value;
}

// Composite Simpson on n panels: an integration rule unrelated to Gauss-Kronrod.
template <typename F>
double simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

TEST(ConeSphereParamsTest, Validation) {
  EXPECT_THROW((ConeSphereParams{-0.1, 1.0}.validate()), conevol::DomainError);
  EXPECT_THROW((ConeSphereParams{1.01, 1.0}.validate()), conevol::DomainError);
  EXPECT_THROW((ConeSphereParams{0.5, 1.7}.validate()), conevol::DomainError);
  EXPECT_THROW(cs::volume_semi_analytic({0.5, 0.0}), conevol::DomainError);
}

TEST(ModulusProfileTest, Examples) {
  EXPECT_EQ(cs::modulus_profile({0.5, kPi / 2}, 0.0).value(), 0.0);
  EXPECT_DOUBLE_EQ(cs::modulus_profile({0.5, kPi / 2}, kPi / 2).value(), 0.5);
  EXPECT_DOUBLE_EQ(cs::modulus_profile({0.8, kPi / 2}, kPi / 4).value(),
                   0.8 * (std::sqrt(2.0) / 2) / std::sqrt(1 - 0.32));
  EXPECT_THROW(cs::modulus_profile({0.5, 1.0}, 1.2), conevol::DomainError);
}

TEST(ModulusProfileTest, IncreasingAndBoundedByOffset) {
  for (double k : {0.1, 0.5, 0.9, 0.999}) {
    const ConeSphereParams p{k, kPi / 2};
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
      const double phi = kPi / 2 * i / 100;
      const double m = cs::modulus_profile(p, phi).value();
      EXPECT_GT(m, prev);
      if (i < 100) EXPECT_LT(m, k);
      prev = m;
    }
    EXPECT_DOUBLE_EQ(prev, k);
  }
}

TEST(RhoMaxTest, Examples) {
  EXPECT_EQ(cs::rho_max({0.0, 1.0}, 0.7, 0.3), 1.0);
  EXPECT_EQ(cs::rho_max({1.0, kPi / 2}, 0.0, kPi / 2), 0.0);
  EXPECT_DOUBLE_EQ(cs::rho_max({0.5, kPi / 2}, kPi, kPi / 2), 1.5);
}

TEST(RhoMaxTest, LandsOnTheSphere) {
  for (double k : {0.0, 0.4, 0.95, 1.0}) {
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j <= 8; ++j) {
        const double theta = 2 * kPi * i / 16;
        const double phi = kPi / 2 * j / 8;
        const double r = cs::rho_max({k, kPi / 2}, theta, phi);
        EXPECT_GE(r, 0.0);
        const double x = r * std::sin(phi) * std::cos(theta) + k;
        const double y = r * std::sin(phi) * std::sin(theta);
        const double z = r * std::cos(phi);
        EXPECT_NEAR(x * x + y * y + z * z, 1.0, 1e-14);
      }
    }
  }
}

TEST(SemiAnalyticTest, Examples) {
  EXPECT_NEAR(cs::volume_semi_analytic({0.0, kPi / 3}, 1e-10).volume, kPi / 3, 1e-12);
  EXPECT_NEAR(cs::volume_semi_analytic({0.6, kPi / 2}, 1e-10).volume, 2 * kPi / 3, 1e-9);
  EXPECT_NEAR(cs::volume_semi_analytic({0.4, kPi / 3}, 1e-10).volume,
              cs::volume_quad_2d({0.4, kPi / 3}, 1e-10).volume, 1e-8);
}

TEST(SemiAnalyticTest, MatchesRawSphericalIntegral) {
  // Extended-precision references of the unreduced spherical integral.
  EXPECT_NEAR(cs::volume_semi_analytic({0.4, kPi / 3}).volume, 0.9546227553016546078, 1e-12);
  EXPECT_NEAR(cs::volume_semi_analytic({0.8, kPi / 4}).volume, 0.29653990203954134177, 1e-12);
  for (double k : {0.15, 0.55, 0.95, 1.0}) {
    for (double alpha : {0.3, 1.1, kPi / 2}) {
      const ConeSphereParams p{k, alpha};
      EXPECT_NEAR(cs::volume_semi_analytic(p).volume, raw_spherical_volume(p), 1e-9)
          << k << " " << alpha;
    }
  }
}

TEST(SemiAnalyticTest, OffsetOneHasElementaryVolume) {
  // At k = 1 the region's volume is (32/9) int_0^alpha sin^4.
  EXPECT_NEAR(cs::volume_semi_analytic({1.0, kPi / 3}).volume, 4 * kPi / 9 - std::sqrt(3.0) / 2,
              1e-12);
}

TEST(SemiAnalyticTest, HalfBallInvariance) {
  for (double k : {0.0, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999999, 1.0}) {
    EXPECT_NEAR(cs::volume_semi_analytic({k, kPi / 2}).volume, 2 * kPi / 3, 1e-9) << k;
  }
}

TEST(Quad2dTest, Examples) {
  const auto v = cs::volume_quad_2d({0.0, kPi / 2}, 1e-9);
  EXPECT_NEAR(v.volume, 2 * kPi / 3, 1e-9);
  EXPECT_LE(v.error_estimate, 1e-9);
  EXPECT_EQ(v.method, conevol::Method::quad_2d);
  EXPECT_NEAR(cs::volume_quad_2d({0.8, kPi / 4}, 1e-9).volume,
              cs::volume_semi_analytic({0.8, kPi / 4}, 1e-10).volume, 1e-7);
  EXPECT_NEAR(cs::volume_quad_2d({1.0, kPi / 2}, 1e-9).volume, 2 * kPi / 3, 1e-9);
}

TEST(Quad2dTest, BudgetExhaustionThrows) {
  EXPECT_THROW(cs::volume_quad_2d({0.9, 1.0}, 1e-14, 15), conevol::QuadratureError);
}

TEST(SeriesTermTest, Examples) {
  for (int n = 1; n < 5; ++n) EXPECT_EQ(cs::series_term({0.0, 1.0}, n, 1e-12), 0.0);
  EXPECT_NEAR(cs::series_term({0.3, 1.0}, 0, 1e-12), cs::zeroth_order_approx({0.3, 1.0}), 1e-10);

  const double k = 0.5;
  const double alpha = 1.0;
  const int n = 3;
  // Written with the D^{n - 1/2} denominator and explicit k^{2n}, as the series is stated.
  const auto integrand = [&](double phi) {
    const double s = std::sin(phi);
    const double d = 1 - k * k * std::cos(phi) * std::cos(phi);
    return (8 * k * k * std::pow(s, 2 * n + 3) + (1 - k * k) * (3 + 8 * n) * std::pow(s, 2 * n + 1)) /
           std::pow(d, n - 0.5);
  };
  const double c3 = std::pow(5.0 / 16.0, 2);
  const double expected =
      2 * kPi / 9 * c3 * std::pow(k, 2 * n) / (1 - 2 * n) * simpson(integrand, 0.0, alpha, 100000);
  EXPECT_NEAR(cs::series_term({k, alpha}, n, 1e-12), expected, 1e-12);
}

TEST(SeriesTest, Examples) {
  const auto at_zero = cs::volume_series({0.0, kPi / 4}, 1e-12, 64);
  EXPECT_NEAR(at_zero.result.volume, cap_volume(kPi / 4), 1e-14);
  EXPECT_EQ(at_zero.breakdown.n_used, 1);
  EXPECT_FALSE(at_zero.truncated);

  const auto mid = cs::volume_series({0.4, kPi / 3}, 1e-12, 64);
  EXPECT_NEAR(mid.result.volume, cs::volume_semi_analytic({0.4, kPi / 3}).volume, 1e-8);
  EXPECT_FALSE(mid.truncated);

  const auto slow = cs::volume_series({0.9, kPi / 2}, 1e-12, 64);
  EXPECT_NEAR(slow.result.volume, cs::volume_semi_analytic({0.9, kPi / 2}).volume, 1e-6);
  EXPECT_TRUE(slow.truncated);
  EXPECT_EQ(slow.breakdown.n_used, 64);
}

TEST(SeriesTest, BreakdownIsConsistent) {
  for (double k : {0.2, 0.6, 0.8, 1.0}) {
    const auto s = cs::volume_series({k, 1.2}, 1e-12, 64);
    const auto& bd = s.breakdown;
    ASSERT_EQ(bd.n_used, static_cast<int>(bd.terms.size()));
    ASSERT_EQ(bd.terms.size(), bd.partial_sums.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < bd.terms.size(); ++i) {
      sum += bd.terms[i];
      EXPECT_EQ(bd.partial_sums[i], sum);
    }
    EXPECT_EQ(s.result.volume, bd.partial_sums.back());
    EXPECT_EQ(bd.truncation_estimate, std::abs(bd.terms.back()));
    EXPECT_GE(s.result.error_estimate, bd.truncation_estimate);
  }
}

TEST(SeriesTest, TermsEventuallyShrinkMonotonically) {
  for (double k : {0.2, 0.4, 0.6, 0.8}) {
    for (double alpha : kAlphaGrid) {
      const auto s = cs::volume_series({k, alpha}, 1e-15, 40);
      const auto& t = s.breakdown.terms;
      for (std::size_t n = 2; n + 1 < t.size(); ++n) {
        EXPECT_LT(std::abs(t[n + 1]), std::abs(t[n])) << k << " " << alpha << " n=" << n;
      }
    }
  }
}

TEST(SeriesTest, LadderAgainstSemiAnalyticAndQuad2d) {
  for (double k : {0.0, 0.2, 0.4, 0.6, 0.8}) {
    for (double alpha : kAlphaGrid) {
      const ConeSphereParams p{k, alpha};
      const double semi = cs::volume_semi_analytic(p).volume;
      EXPECT_NEAR(cs::volume_series(p, 1e-12, 64).result.volume, semi, 1e-7) << k << " " << alpha;
      EXPECT_NEAR(cs::volume_quad_2d(p).volume, semi, 1e-7) << k << " " << alpha;
    }
  }
}

TEST(SeriesTest, TinyOffsetGivesCapVolume) {
  for (double alpha : kAlphaGrid) {
    EXPECT_NEAR(cs::volume_series({1e-8, alpha}, 1e-12, 64).result.volume, cap_volume(alpha), 1e-9);
  }
}

TEST(SeriesTest, RejectsBadArguments) {
  EXPECT_THROW(cs::volume_series({0.5, 1.0}, 0.0, 10), conevol::DomainError);
  EXPECT_THROW(cs::volume_series({0.5, 1.0}, 1e-12, 0), conevol::DomainError);
  EXPECT_THROW(cs::series_term({0.5, 1.0}, -1, 1e-12), conevol::DomainError);
}

TEST(ZerothOrderTest, Examples) {
  EXPECT_NEAR(cs::zeroth_order_approx({0.0, kPi / 3}), kPi / 3, 1e-15);
  for (double alpha : kAlphaGrid) {
    EXPECT_NEAR(cs::zeroth_order_approx({0.0, alpha}), cap_volume(alpha), 1e-15);
    EXPECT_NEAR(cs::zeroth_order_approx({1e-9, alpha}), cap_volume(alpha), 1e-15);
    EXPECT_NEAR(cs::zeroth_order_approx({2e-8, alpha}), cap_volume(alpha), 1e-14);
  }
  EXPECT_NEAR(cs::zeroth_order_approx({0.2, kPi / 4}), cs::series_term({0.2, kPi / 4}, 0, 1e-13),
              1e-10);
}

TEST(ZerothOrderTest, MatchesLeadingTermEverywhere) {
  for (double k : {0.05, 0.3, 0.7, 0.99, 1.0}) {
    for (double alpha : {0.1, 0.8, kPi / 2}) {
      const ConeSphereParams p{k, alpha};
      EXPECT_NEAR(cs::zeroth_order_approx(p), cs::series_term(p, 0, 1e-13), 1e-10) << k << alpha;
    }
  }
}

TEST(ZerothOrderTest, ErrorIsSecondOrderInOffset) {
  std::vector<double> ratios;
  for (double k : {0.2, 0.1, 0.05, 0.025}) {
    const ConeSphereParams p{k, kPi / 4};
    const double v = cs::volume_semi_analytic(p, 1e-13).volume;
    ratios.push_back(std::abs(v - cs::zeroth_order_approx(p)) / (k * k));
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  EXPECT_GT(*lo, 0.0);
  EXPECT_LT(*hi / *lo, 2.0);
}

TEST(OddThetaTermsTest, Examples) {
  EXPECT_LE(std::abs(cs::odd_theta_terms_vanish_check({0.7, kPi / 2}, kPi / 4)), 1e-12);
  EXPECT_EQ(cs::odd_theta_terms_vanish_check({0.0, 1.0}, 0.5), 0.0);
  EXPECT_LE(std::abs(cs::odd_theta_terms_vanish_check({1.0, kPi / 2}, kPi / 2)), 1e-12);
  EXPECT_THROW(cs::odd_theta_terms_vanish_check({0.5, 0.5}, 0.6), conevol::DomainError);
}

}  // namespace
