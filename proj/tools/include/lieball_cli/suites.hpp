#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lieball/oracles.hpp"

namespace lieball::cli {

struct SuiteConfig {
  int n = 3;
  int trials = 200;
  std::uint64_t seed = 0;
};

struct SuiteResult {
  double max_error = 0.0;
  int trials = 0;  // trials actually run; geodesic suites integrate fewer paths
};

/// A named invariant check. Trial i draws its randomness from
/// Rng::stream(seed, i), so results do not depend on evaluation order.
struct Suite {
  std::string name;
  std::string summary;
  double threshold;
  std::function<SuiteResult(const SuiteConfig&)> run;
};

const std::vector<Suite>& suites();
const Suite* find_suite(std::string_view name);

/// pass is max_error <= threshold with a finite max_error.
oracles::VerificationReport run_suite(const Suite& suite, const SuiteConfig& cfg);

}  // namespace lieball::cli
