#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "conevol/volume.hpp"

namespace conevol::cli {

enum class Problem { cone_cylinder, cone_sphere };

std::string_view problem_name(Problem p);
std::optional<Problem> parse_problem_name(std::string_view name);

/// One evaluated point, serialized as a CSV row or a single-line JSON object.
struct RunRecord {
  Problem problem = Problem::cone_cylinder;
  double k = 0.0;
  double alpha_rad = 0.0;
  Method method = Method::closed_form;
  double volume = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  std::optional<std::uint64_t> seed;
  std::optional<int> n_terms;

  bool operator==(const RunRecord&) const = default;
};

/// 17 significant digits, shortest %g-style spelling.
std::string format_real(double v);

std::string csv_header();
std::string to_csv_row(const RunRecord& r);
/// Field names and order match the CSV columns; absent optionals are null.
std::string to_json_line(const RunRecord& r);

/// Throw std::invalid_argument on malformed input.
RunRecord parse_csv_row(std::string_view row);
RunRecord parse_json_line(std::string_view line);

}  // namespace conevol::cli
