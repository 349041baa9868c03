#include "conevol/volume.hpp"

#include <array>
#include <utility>

namespace conevol {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 8> kNames = {{
    {Method::closed_form, "closed_form"},
    {Method::quad_r3, "quad_r3"},
    {Method::quad_reduced, "quad_reduced"},
    {Method::series, "series"},
    {Method::semi_analytic, "semi_analytic"},
    {Method::quad_2d, "quad_2d"},
    {Method::monte_carlo, "monte_carlo"},
    {Method::zeroth_approx, "zeroth_approx"},
}};

}  // namespace

std::string_view method_name(Method m) {
  for (const auto& [method, name] : kNames) {
    if (method == m) return name;
  }
  return "unknown";
}

std::optional<Method> parse_method_name(std::string_view name) {
  for (const auto& [method, n] : kNames) {
    if (n == name) return method;
  }
  return std::nullopt;
}

}  // namespace conevol
