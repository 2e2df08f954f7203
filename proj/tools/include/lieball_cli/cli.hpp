#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace lieball::cli {

enum ExitCode : int {
  kSuccess = 0,
  kSuiteFailure = 1,
  kUsageError = 2,
  kComputationError = 3,
};

/// Settings shared by all subcommands. Values come from, in increasing
/// priority: defaults, the key=value file named by --config or the
/// LIEBALL_CONFIG environment variable, and command-line flags.
struct CliConfig {
  int n = 3;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "json";
  int trials = 200;
};

inline constexpr const char* kConfigEnv = "LIEBALL_CONFIG";

/// Runs one command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with `args` excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieball::cli
