#include "conevol/elliptic.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "conevol/errors.hpp"
#include "conevol/quadrature.hpp"

namespace {

using conevol::elliptic::AgmConfig;
using conevol::elliptic::Modulus;
namespace ell = conevol::elliptic;

constexpr double kHalfPi = std::numbers::pi / 2;

// Defining integrals, evaluated by the quadrature engine (independent of the AGM path).
double quad_K(double m) {
  return conevol::oracle::integrate_adaptive(
             [m](double t) { return 1.0 / std::sqrt(1.0 - m * m * std::sin(t) * std::sin(t)); },
             0.0, kHalfPi, 1e-14)
      .value;
}

double quad_E(double m) {
  return conevol::oracle::integrate_adaptive(
             [m](double t) { return std::sqrt(1.0 - m * m * std::sin(t) * std::sin(t)); }, 0.0,
             kHalfPi, 1e-14)
      .value;
}

double quad_E2(double m) {
  return conevol::oracle::integrate_adaptive(
             [m](double t) {
               const double s2 = std::sin(t) * std::sin(t);
               return s2 * std::sqrt(1.0 - m * m * s2);
             },
             0.0, kHalfPi, 1e-14)
      .value;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

TEST(ModulusTest, RejectsOutOfRange) {
  EXPECT_THROW(Modulus(-1e-12), conevol::DomainError);
  EXPECT_THROW(Modulus(1.0 + 1e-12), conevol::DomainError);
  EXPECT_THROW(Modulus(std::nan("")), conevol::DomainError);
  EXPECT_NO_THROW(Modulus(0.0));
  EXPECT_NO_THROW(Modulus(1.0));
}

TEST(AgmConfigTest, RejectsBadSettings) {
  EXPECT_THROW(ell::complete_K(Modulus(0.5), AgmConfig{0.0, 40}), conevol::DomainError);
  EXPECT_THROW(ell::complete_K(Modulus(0.5), AgmConfig{1e-15, 0}), conevol::DomainError);
}

TEST(CompleteKTest, Examples) {
  EXPECT_EQ(ell::complete_K(Modulus(0.0)), kHalfPi);
  EXPECT_THROW(ell::complete_K(Modulus(1.0)), conevol::DomainError);
  EXPECT_NEAR(ell::complete_K(Modulus(0.5)), quad_K(0.5), 1e-12);
  // 30-digit reference value.
  EXPECT_NEAR(ell::complete_K(Modulus(0.5)), 1.6857503548125960428712036578, 1e-15);
}

TEST(CompleteKTest, ConvergenceErrorWhenIterationsTooFew) {
  EXPECT_THROW(ell::complete_K(Modulus(0.9), AgmConfig{1e-15, 1}), conevol::ConvergenceError);
}

TEST(CompleteETest, Examples) {
  EXPECT_EQ(ell::complete_E(Modulus(0.0)), kHalfPi);
  EXPECT_EQ(ell::complete_E(Modulus(1.0)), 1.0);
  EXPECT_NEAR(ell::complete_E(Modulus(0.5)), quad_E(0.5), 1e-12);
  EXPECT_NEAR(ell::complete_E(Modulus(0.5)), 1.46746220933942715545979526699, 1e-15);
}

TEST(CompleteTest, MatchesReferenceValuesNearOne) {
  // 30-digit references (mpmath ellipk / ellipe at m = k^2, k the exact double).
  struct Ref {
    double k, K, E;
  };
  const Ref refs[] = {
      {0.9, 2.28054913842277030049452329579, 1.1716970527816141138287335939},
      {0.99, 3.35660052336119194248038083399, 1.02847580902880402187065612479},
      {0.999, 4.49559639584214372787783751405, 1.00399440996550782077695779985},
      {0.999999, 7.94747977354796703266620036207, 1.00000744747772439214950771345},
  };
  for (const auto& r : refs) {
    EXPECT_NEAR(ell::complete_K(Modulus(r.k)), r.K, 4e-15 * r.K) << r.k;
    EXPECT_NEAR(ell::complete_E(Modulus(r.k)), r.E, 4e-15) << r.k;
  }
}

TEST(CompleteTest, AgreesWithDefiningIntegralsOnGrid) {
  for (int i = 0; i <= 200; ++i) {
    const double m = 0.999 * i / 200;
    EXPECT_NEAR(ell::complete_K(Modulus(m)), quad_K(m), 1e-11) << m;
    EXPECT_NEAR(ell::complete_E(Modulus(m)), quad_E(m), 1e-11) << m;
  }
}

TEST(CompleteTest, EBelowQuarterPeriodBelowK) {
  EXPECT_EQ(ell::complete_E(Modulus(0.0)), ell::complete_K(Modulus(0.0)));
  for (int i = 1; i <= 120; ++i) {
    const double m = 0.99 * i / 120;
    EXPECT_LT(ell::complete_E(Modulus(m)), kHalfPi) << m;
    EXPECT_GT(ell::complete_K(Modulus(m)), kHalfPi) << m;
  }
}

TEST(CompleteTest, Monotone) {
  double prev_E = ell::complete_E(Modulus(0.0));
  double prev_K = ell::complete_K(Modulus(0.0));
  for (int i = 1; i < 100; ++i) {
    const Modulus m(i / 100.0);
    const double E = ell::complete_E(m);
    const double K = ell::complete_K(m);
    EXPECT_LT(E, prev_E) << m.value();
    EXPECT_GT(K, prev_K) << m.value();
    prev_E = E;
    prev_K = K;
  }
}

TEST(E2Test, Examples) {
  EXPECT_EQ(ell::e2(Modulus(0.0)), std::numbers::pi / 4);
  EXPECT_NEAR(ell::e2(Modulus(1.0)), 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(ell::e2(Modulus(0.6)), quad_E2(0.6), 1e-12);
  EXPECT_NEAR(ell::e2(Modulus(0.6)), 0.669832484648554475652928309886, 1e-15);
}

TEST(E2Test, AgreesWithQuadratureAcrossSmallModulusSwitch) {
  for (double m : {1e-8, 1e-5, 1e-3, 0.01, 0.1, 0.2499, 0.25, 0.2501, 0.5, 0.9, 0.999, 1.0}) {
    EXPECT_NEAR(ell::e2(Modulus(m)), quad_E2(m), 1e-11) << m;
  }
}

TEST(E2Test, MatchesReductionIdentity) {
  for (int i = 1; i <= 100; ++i) {
    const double m = 0.01 + 0.99 * i / 100;
    const double m2 = m * m;
    const Modulus mod(m);
    const double identity = (2 * m2 - 1) / (3 * m2) * ell::complete_E(mod) +
                            (m == 1.0 ? 0.0 : (1 - m2) / (3 * m2) * ell::complete_K(mod));
    EXPECT_NEAR(ell::e2(mod), identity, 1e-10) << m;
  }
}

TEST(SeriesCoefficientTest, Examples) {
  EXPECT_EQ(ell::series_coefficient(0), 1.0);
  EXPECT_EQ(ell::series_coefficient(1), 0.25);
  EXPECT_EQ(ell::series_coefficient(2), 9.0 / 64.0);
  EXPECT_THROW(ell::series_coefficient(-1), conevol::DomainError);
}

TEST(SeriesCoefficientTest, RecurrenceMatchesFactorialsExactly) {
  for (int n = 0; n <= 12; ++n) {
    const double root = factorial(2 * n) / (std::pow(4.0, n) * factorial(n) * factorial(n));
    EXPECT_EQ(ell::series_coefficient(n), root * root) << n;
  }
}

TEST(SeriesTest, Examples) {
  EXPECT_EQ(ell::series_E(Modulus(0.0), 7), kHalfPi);
  EXPECT_EQ(ell::series_K(Modulus(0.0), 7), kHalfPi);
  EXPECT_EQ(ell::series_E(Modulus(0.9), 1), kHalfPi);
  EXPECT_NEAR(ell::series_E(Modulus(0.3), 20), ell::complete_E(Modulus(0.3)), 1e-12);
  EXPECT_NEAR(ell::series_K(Modulus(0.3), 20), ell::complete_K(Modulus(0.3)), 1e-12);
  EXPECT_DOUBLE_EQ(ell::series_K(Modulus(0.5), 2), kHalfPi * (1 + 0.25 * 0.25));
}

TEST(SeriesTest, Preconditions) {
  EXPECT_THROW(ell::series_E(Modulus(1.0), 10), conevol::DomainError);
  EXPECT_THROW(ell::series_K(Modulus(1.0), 10), conevol::DomainError);
  EXPECT_THROW(ell::series_K(Modulus(0.5), 0), conevol::DomainError);
}

TEST(SeriesTest, FortyTermsMatchAgmUpToPointSeven) {
  for (int i = 0; i <= 70; ++i) {
    const Modulus m(i / 100.0);
    EXPECT_NEAR(ell::series_E(m, 40), ell::complete_E(m), 1e-12) << m.value();
    EXPECT_NEAR(ell::series_K(m, 40), ell::complete_K(m), 1e-12) << m.value();
  }
}

TEST(SeriesTest, SlowConvergenceNearOne) {
  // Documented behaviour, not a guarantee: 40 terms are far off at k = 0.95.
  const Modulus m(0.95);
  EXPECT_GT(ell::complete_K(m) - ell::series_K(m, 40), 1e-3);
  EXPECT_LT(ell::complete_K(m) - ell::series_K(m, 400), 1e-8);
}

}  // namespace
