#pragma once

#include <utility>

#include "lieball/types.hpp"

namespace lieball {

/// T-map: z = x + i y -> sphere with center x and radius vector y.
OrientedSphere t_map(const CplxPoint& z);
CplxPoint t_inv(const OrientedSphere& s);

/// For n = 2 the sphere is an ordered point pair, (z1 + i z2, conj(z1) + i conj(z2))
/// under R^2 ~ C. Throws DomainError for other dimensions.
std::pair<RealPoint, RealPoint> point_pair(const OrientedSphere& s);

/// a in T(z), i.e. |Q(z - a)| <= tol (1 + |z|^2 + |a|^2).
bool sphere_contains_point(const CplxPoint& z, const RealPoint& a, double tol = kDefaultTol);

/// The equivariant diffeomorphism from the tangent bundle of the Poincare ball
/// onto the Lie ball:
///
///   theta(x, v) = delta_x(z'),   z' = -i (v / |v|) tanh(|v| / (1 - |x|^2)).
///
/// The zero section maps identically onto the real ball.
CplxPoint theta(const TangentVector& tv);

/// Inverse of theta on the open Lie ball.
///
/// Closed-form construction: the hyperbolic center of T(z) is the hyperbolic
/// midpoint of the two points where T(z) meets the plane spanned by Re z and
/// Im z; moving it to the origin with delta_x leaves a purely imaginary point
/// from which v is read off.
TangentVector theta_inv(const CplxPoint& z, double tol = kDefaultTol);

/// S-map: tangent vector -> sphere with hyperbolic center x and hyperbolic
/// radius |v| / (1 - |x|^2), lying in the hyperbolic hyperplane through x
/// orthogonal to v.
OrientedSphere s_map(const TangentVector& tv);
TangentVector s_inv(const OrientedSphere& s);

struct EuclideanSphere {
  RealPoint center;
  double radius;
};

/// Hyperbolic sphere data: `radius` is in the same chart units as tangent
/// vectors at `center`, so the hyperbolic radius is radius / (1 - |center|^2).
struct HyperbolicSphere {
  RealPoint center;
  double radius;
};

EuclideanSphere sphere_hyp_to_euc(const HyperbolicSphere& s);
HyperbolicSphere sphere_euc_to_hyp(const EuclideanSphere& s);

/// Point of T(z) farthest from the origin; for z on the Lie-ball boundary it is
/// the unit vector where the sphere touches the sphere at infinity.
/// Throws NotBoundaryError unless classify(z, tol) is kBoundary.
RealPoint boundary_tangency(const CplxPoint& z, double tol = kDefaultTol);

/// Farthest point x + |y| w of T(z) from the origin, w the unit vector
/// orthogonal to y in span{x, y} with w . x >= 0. Defined for every z.
RealPoint farthest_point(const CplxPoint& z);

}  // namespace lieball
