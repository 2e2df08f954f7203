#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lieball/moebius.hpp"
#include "lieball/random.hpp"
#include "lieball/types.hpp"

// Brute-force checks used to validate the closed-form maps. Nothing in here
// calls the operation it is meant to check.
namespace lieball::oracles {

struct SampleSet {
  std::vector<RealPoint> points;
  std::uint64_t seed = 0;
  int count = 0;
};

/// Uniform samples of the sphere. Point-spheres give {center}; for n = 2 the
/// two points of the 0-sphere are returned in T-map order.
SampleSet sample_sphere(const OrientedSphere& s, int m, std::uint64_t seed);

/// Unoriented least-squares sphere through the points.
struct SphereFit {
  RealPoint center;
  RealVec normal;  // unit normal of the supporting hyperplane, arbitrary sign
  double radius = 0.0;
  double residual = 0.0;  // RMS of radial and out-of-plane deviations
};

/// Throws RankDeficientError for fewer than n + 1 points (2 for n = 2) or
/// degenerate configurations.
SphereFit fit_sphere(const std::vector<RealPoint>& points);

using VectorMap = std::function<RealVec(const RealVec&)>;

/// Central differences (f(p + h e_i) - f(p - h e_i)) / 2h.
RealMat fd_jacobian(const VectorMap& f, const RealVec& p, double h = 1e-6);

struct NewtonOptions {
  int max_iterations = 100;
  double residual_tol = 1e-11;
};

/// Damped Newton on theta(x, v) - z. Throws NoConvergenceError with the best
/// iterate when the residual does not reach residual_tol.
TangentVector newton_theta_inv(const CplxPoint& z, const TangentVector& guess,
                               const NewtonOptions& opts = {});

struct Conformality {
  double scale;
  double deviation;
};

/// J = fd_jacobian of the real motion at p; scale = |det J|^(1/n),
/// deviation = max |J^T J - scale^2 I|.
Conformality conformality_check(const HyperbolicMotion& g, const RealPoint& p, double h = 1e-6);
Conformality conformality_check(const VectorMap& f, const RealPoint& p, double h = 1e-6);

// Generators shared by tests, verification suites and benchmarks.

/// Motion with Haar-random rho of the given orientation character
/// (+1 preserving, -1 reversing, 0 either) and |a| <= max_translation.
HyperbolicMotion random_motion(Rng& rng, int n, int orientation = 0, double max_translation = 0.9);

/// |x| <= max_base, hyperbolic length of v uniform in [0, max_hyp_length].
TangentVector random_tangent_vector(Rng& rng, int n, double max_base = 0.95,
                                    double max_hyp_length = 5.0);

/// Random point with gauge uniform in [0, max_gauge].
CplxPoint random_lie_point(Rng& rng, int n, double max_gauge);

/// Random point with gauge exactly 1 (up to rounding).
CplxPoint random_boundary_point(Rng& rng, int n);

/// Report record of a verification run.
struct VerificationReport {
  std::string suite;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double max_error = 0.0;
  bool pass = false;
};

}  // namespace lieball::oracles
