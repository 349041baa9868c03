#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "conevol/elliptic.hpp"

namespace conevol::cli {

struct CheckOutcome {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  /// Coarser grids and 10^6 instead of 10^7 Monte Carlo samples.
  bool fast = false;
  std::uint64_t seed = 42;
  /// E2 kernel used by the E/E2 route of the cone-cylinder ladder.
  /// Replaceable so fault-injection tests can feed a broken reduction.
  std::function<double(elliptic::Modulus)> e2 = [](elliptic::Modulus m) {
    return elliptic::e2(m);
  };
};

/// Cross-method ladders, limit identities, vanishing integrals, half-ball
/// invariance and Monte Carlo concordance for both problems.
std::vector<CheckOutcome> run_verification(const VerifyOptions& opts);

void print_verification_table(std::ostream& out, const std::vector<CheckOutcome>& checks);

}  // namespace conevol::cli
