#pragma once

#include <string_view>

#include "lieball/types.hpp"

namespace lieball {

/// Q(z) = sum z_i^2, the bilinear (non-Hermitian) extension of the squared norm.
Complex q_form(const CplxPoint& z);

/// Bilinear product sum z_i w_i (no conjugation).
Complex bilinear_dot(const CplxPoint& z, const CplxPoint& w);

/// Lie-ball gauge |z|^2 + sqrt(|z|^4 - |Q(z)|^2).
///
/// This is the squared norm of the point of T(z) farthest from the origin, so
/// the Lie ball is { gauge < 1 }. The radicand equals 4 |x ^ y|^2 for
/// z = x + i y and is evaluated in that form, which keeps it nonnegative in
/// floating point. On real points the gauge is the squared euclidean norm.
double lie_gauge(const CplxPoint& z);

enum class BallClass { kInterior, kBoundary, kExterior };

struct BallClassification {
  BallClass cls;
  double gauge;
};

BallClassification classify(const CplxPoint& z, double tol = kDefaultTol);

std::string_view to_string(BallClass cls);

/// Hyperbolic distance for the metric ds^2 / (1 - |x|^2)^2, so d(0, x) = artanh|x|.
/// Throws DomainError outside the open unit ball.
double hyp_distance(const RealPoint& p, const RealPoint& q);

/// Point on the geodesic from p to q at equal distance from both.
RealPoint hyp_midpoint(const RealPoint& p, const RealPoint& q);

/// Throws DomainError unless |p| < 1.
void require_in_ball(const RealPoint& p, std::string_view what);

/// Complex vector with the given real and imaginary parts.
CplxPoint make_complex(const RealVec& re, const RealVec& im);

}  // namespace lieball
