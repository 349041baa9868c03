#include "conevol/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "conevol/errors.hpp"

namespace conevol::elliptic {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_below_one(Modulus m, const char* op) {
  if (m.value() >= 1.0) {
    throw DomainError(std::string(op) + ": modulus must be < 1");
  }
}

// Term-wise integral of the binomial expansion of sin^2 t sqrt(1 - k^2 sin^2 t):
//   sum_n binom(1/2, n) (-k^2)^n int_0^{pi/2} sin^{2n+2} t dt.
double e2_small_modulus(double k2) {
  double binom = 1.0;                  // binom(1/2, n) (-1)^n
  double wallis = std::numbers::pi / 4;  // int sin^{2n+2}
  double power = 1.0;
  double sum = 0.0;
  for (int n = 0; n < 64; ++n) {
    const double term = binom * power * wallis;
    sum += term;
    if (std::abs(term) <= std::numeric_limits<double>::epsilon() * std::abs(sum)) {
      break;
    }
    binom *= (n - 0.5) / (n + 1);
    wallis *= (2.0 * n + 3.0) / (2.0 * n + 4.0);
    power *= k2;
  }
  return sum;
}

// sqrt(c_n) = binom(2n, n) / 4^n is a dyadic rational; multiplying before
// dividing keeps the step exact while the numerator fits in 53 bits.
double next_central_ratio(double root, int n) {
  return root * (2.0 * n + 1.0) / (2.0 * n + 2.0);
}

}  // namespace

Modulus::Modulus(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError("modulus must lie in [0, 1], got " + std::to_string(value));
  }
}

double Modulus::complementary() const noexcept {
  return std::sqrt((1.0 - value_) * (1.0 + value_));
}

void AgmConfig::validate() const {
  if (!(tolerance > 0.0)) throw DomainError("AgmConfig: tolerance must be > 0");
  if (max_iterations < 1) throw DomainError("AgmConfig: max_iterations must be >= 1");
}

CompletePair complete_KE(Modulus m, const AgmConfig& cfg) {
  cfg.validate();
  if (m.value() == 1.0) {
    return {std::numeric_limits<double>::infinity(), 1.0};
  }
  // AGM on (1, k'); the companion sum collects 2^{n-1} c_n^2 with c_0 = k.
  double a = 1.0;
  double b = m.complementary();
  double c2 = m.squared();
  double weight = 0.5;
  double sum = weight * c2;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    if (std::abs(a - b) <= cfg.tolerance) {
      const double K = kHalfPi / a;
      return {K, K * (1.0 - sum)};
    }
    const double c = 0.5 * (a - b);
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
    weight *= 2.0;
    sum += weight * c * c;
  }
  if (std::abs(a - b) <= cfg.tolerance) {
    const double K = kHalfPi / a;
    return {K, K * (1.0 - sum)};
  }
  throw ConvergenceError("AGM did not converge in " + std::to_string(cfg.max_iterations) +
                         " iterations");
}

double complete_K(Modulus m, const AgmConfig& cfg) {
  if (m.value() == 1.0) throw DomainError("complete_K: K(1) diverges");
  return complete_KE(m, cfg).K;
}

double complete_E(Modulus m, const AgmConfig& cfg) {
  if (m.value() == 1.0) {
    cfg.validate();
    return 1.0;
  }
  return complete_KE(m, cfg).E;
}

double e2(Modulus m, const AgmConfig& cfg) {
  const double k = m.value();
  if (k == 0.0) return std::numbers::pi / 4;
  if (k < kE2SeriesThreshold) return e2_small_modulus(m.squared());
  if (k == 1.0) return complete_E(m, cfg) / 3.0;
  const double k2 = m.squared();
  const auto [K, E] = complete_KE(m, cfg);
  return ((2.0 * k2 - 1.0) * E + (1.0 - k2) * K) / (3.0 * k2);
}

double series_coefficient(int n) {
  if (n < 0) throw DomainError("series_coefficient: n must be >= 0");
  double root = 1.0;
  for (int j = 0; j < n; ++j) root = next_central_ratio(root, j);
  return root * root;
}

double series_E(Modulus m, int n_terms) {
  require_below_one(m, "series_E");
  if (n_terms < 1) throw DomainError("series_E: n_terms must be >= 1");
  const double k2 = m.squared();
  double root = 1.0;
  double power = 1.0;
  double sum = 0.0;
  for (int n = 0; n < n_terms; ++n) {
    sum += root * root / (1.0 - 2.0 * n) * power;
    root = next_central_ratio(root, n);
    power *= k2;
  }
  return kHalfPi * sum;
}

double series_K(Modulus m, int n_terms) {
  require_below_one(m, "series_K");
  if (n_terms < 1) throw DomainError("series_K: n_terms must be >= 1");
  const double k2 = m.squared();
  double root = 1.0;
  double power = 1.0;
  double sum = 0.0;
  for (int n = 0; n < n_terms; ++n) {
    sum += root * root * power;
    root = next_central_ratio(root, n);
    power *= k2;
  }
  return kHalfPi * sum;
}

}  // namespace conevol::elliptic
