#pragma once

#include <cstdint>
#include <random>

#include "lieball/types.hpp"

namespace lieball {

/// Seedable generator with platform-stable output.
///
/// Wraps std::mt19937_64 (whose sequence is fixed by the standard) and derives
/// uniform and normal variates itself, since the std:: distributions are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for (seed, stream) pairs, e.g. one per trial.
  static Rng stream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller).
  double normal();

  RealVec normal_vector(int n);
  RealVec unit_vector(int n);
  /// Uniform in the euclidean ball of radius `radius`.
  RealPoint in_ball(int n, double radius);
  CplxPoint complex_normal_vector(int n);
  /// Haar-random orthogonal matrix with the requested determinant sign.
  RealMat orthogonal(int n, int det_sign);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lieball
