#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "conevol/run_record.hpp"

namespace conevol::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

struct EvalSettings {
  double tol = kDefaultTolerance;
  int terms = 64;
  long samples = 10'000'000;
  std::uint64_t seed = 42;
  /// Threads for Monte Carlo; 0 = hardware concurrency.
  unsigned mc_workers = 0;
};

struct EvalOutcome {
  RunRecord record;
  /// Quadrature budget exhausted or series truncated before term_tol; the
  /// record then holds the best estimate reached.
  bool numerical_warning = false;
  std::string message;
};

/// Evaluates one (problem, method, k, alpha) point. Throws DomainError for
/// out-of-range parameters or a method that does not apply to the problem.
EvalOutcome evaluate_point(Problem problem, Method method, double k, double alpha_rad,
                           const EvalSettings& settings);

/// Maps a --method spelling (closed, quad-r3, ...) to its tag.
std::optional<Method> parse_method_flag(std::string_view flag);

/// Inclusive grid "start:stop:count". Throws std::invalid_argument.
std::vector<double> parse_grid(std::string_view spec);

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conevol::cli
