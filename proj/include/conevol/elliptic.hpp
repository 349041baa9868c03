#pragma once

// Complete elliptic integrals of the first and second kind, evaluated by the
// arithmetic-geometric mean, plus their Maclaurin series in the modulus.

namespace conevol::elliptic {

/// Elliptic modulus k, restricted to [0, 1].
class Modulus {
 public:
  /// Throws DomainError if value is outside [0, 1] or not finite.
  explicit Modulus(double value);

  double value() const noexcept { return value_; }
  /// k^2
  double squared() const noexcept { return value_ * value_; }
  /// sqrt(1 - k^2), computed without cancellation near k = 1.
  double complementary() const noexcept;

 private:
  double value_;
};

struct AgmConfig {
  double tolerance = 1e-15;
  int max_iterations = 40;

  /// Throws DomainError unless tolerance > 0 and max_iterations >= 1.
  void validate() const;
};

/// K(k) = int_0^{pi/2} (1 - k^2 sin^2 t)^{-1/2} dt.
/// Throws DomainError at k = 1 and ConvergenceError if the AGM stalls.
double complete_K(Modulus m, const AgmConfig& cfg = {});

/// E(k) = int_0^{pi/2} sqrt(1 - k^2 sin^2 t) dt. E(1) is exactly 1.
double complete_E(Modulus m, const AgmConfig& cfg = {});

/// K and E from a single AGM run. At k = 1, first is +inf.
struct CompletePair {
  double K;
  double E;
};
CompletePair complete_KE(Modulus m, const AgmConfig& cfg = {});

/// E2(k) = int_0^{pi/2} sin^2 t sqrt(1 - k^2 sin^2 t) dt.
///
/// For k >= kE2SeriesThreshold this is the reduction
///   E2 = (2k^2 - 1)/(3k^2) E(k) + (1 - k^2)/(3k^2) K(k),
/// below it the integrand's binomial expansion is integrated term by term,
/// since the reduction loses about log10(1/k^2) digits to cancellation.
double e2(Modulus m, const AgmConfig& cfg = {});

inline constexpr double kE2SeriesThreshold = 0.25;

/// c_n = ((2n)! / (2^{2n} (n!)^2))^2, via c_{n+1} = c_n ((2n+1)/(2n+2))^2.
double series_coefficient(int n);

/// (pi/2) sum_{n < n_terms} c_n / (1 - 2n) k^{2n}. Requires k < 1, n_terms >= 1.
double series_E(Modulus m, int n_terms);

/// (pi/2) sum_{n < n_terms} c_n k^{2n}. Requires k < 1, n_terms >= 1.
double series_K(Modulus m, int n_terms);

}  // namespace conevol::elliptic
