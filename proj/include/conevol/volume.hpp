#pragma once

#include <optional>
#include <string_view>

namespace conevol {

enum class Method {
  closed_form,
  quad_r3,
  quad_reduced,
  series,
  semi_analytic,
  quad_2d,
  monte_carlo,
  zeroth_approx,
};

std::string_view method_name(Method m);
std::optional<Method> parse_method_name(std::string_view name);

/// Volume in units of (unit radius)^3, tagged with the route that produced it.
struct VolumeResult {
  double volume = 0.0;
  Method method = Method::closed_form;
  double error_estimate = 0.0;
  /// Integrand calls, series terms' integrand calls, or Monte Carlo samples.
  long evaluations = 0;
};

inline constexpr double kDefaultTolerance = 1e-10;

/// Smallest half-angle accepted; the volume grows like cot(alpha) below it.
inline constexpr double kMinAlpha = 1e-6;

}  // namespace conevol
