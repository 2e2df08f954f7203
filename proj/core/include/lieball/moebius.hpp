#pragma once

#include "lieball/types.hpp"

namespace lieball {

/// Sphere inversion x -> a + alpha^2 (x - a) / |x - a|^2.
struct Inversion {
  RealPoint center;
  double radius = 1.0;
};

/// Hyperbolic isometry of the Poincare ball in normal form x -> rho(delta_a(x)).
///
/// Note that delta_0 = -id, so the identity motion has rho = -I.
class HyperbolicMotion {
 public:
  /// Throws DomainError if rho is not orthogonal to 1e-12 or |a| >= 1.
  HyperbolicMotion(RealMat orthogonal_part, RealPoint translation);

  static HyperbolicMotion identity(int n);
  /// The involution delta_a (rho = I).
  static HyperbolicMotion involution(const RealPoint& a);
  /// The euclidean isometry x -> r x.
  static HyperbolicMotion linear(const RealMat& r);

  int dim() const { return static_cast<int>(translation_.size()); }
  const RealMat& orthogonal_part() const { return rho_; }
  const RealPoint& translation_param() const { return translation_; }
  /// sign(det rho).
  int parity() const { return parity_; }

 private:
  RealMat rho_;
  RealPoint translation_;
  int parity_;
};

/// Holomorphic continuation of the inversion. Throws IsotropicConeError when
/// |Q(z - a)| <= tol, i.e. a lies on T(z).
CplxPoint inversion_apply(const Inversion& inv, const CplxPoint& z, double tol = 1e-12);

/// delta_a(z) = [(|a|^2 - 1) z + (1 + Q(z)) a - 2 (z.a) a] / (Q(z)|a|^2 - 2 z.a + 1).
///
/// Involutive, swaps a and 0. The denominator equals |a|^2 Q(z - a*) with
/// a* = a / |a|^2, so it only vanishes when a* lies on T(z); throws
/// SingularDenominatorError in that case.
CplxPoint delta_apply(const RealPoint& a, const CplxPoint& z);
RealPoint delta_apply(const RealPoint& a, const RealPoint& x);

/// Holomorphic derivative d(delta_a)/dz at z.
CplxMat delta_jacobian(const RealPoint& a, const CplxPoint& z);
RealMat delta_jacobian(const RealPoint& a, const RealPoint& x);
/// Derivative of delta_a(z) with respect to the parameter a (real directions).
CplxMat delta_param_jacobian(const RealPoint& a, const CplxPoint& z);
/// The n x n matrix of y -> d(delta_a)(y) w differentiated at y = x.
RealMat delta_second_derivative(const RealPoint& a, const RealPoint& x, const RealVec& w);

CplxPoint motion_apply(const HyperbolicMotion& g, const CplxPoint& z);
RealPoint motion_apply(const HyperbolicMotion& g, const RealPoint& x);
RealPoint motion_apply_inverse(const HyperbolicMotion& g, const RealPoint& y);
/// Exact differential of the real motion at x.
RealMat motion_differential(const HyperbolicMotion& g, const RealPoint& x);

/// Normal form of x -> g1(g2(x)).
HyperbolicMotion motion_compose(const HyperbolicMotion& g1, const HyperbolicMotion& g2);
HyperbolicMotion motion_inverse(const HyperbolicMotion& g);

/// Orientation character: +1 if the motion preserves orientation, -1 otherwise.
/// Equals sign(det rho) * (-1)^n since d(delta_a)(0) = (|a|^2 - 1) I.
int motion_parity(const HyperbolicMotion& g);

/// (x, v) -> (g(x), eps * dg(x) v) with eps = motion_parity(g).
TangentVector tangent_action(const HyperbolicMotion& g, const TangentVector& tv);

/// How the radius vector of an image sphere is oriented.
enum class SphereAction {
  /// Y chosen so that Y . dg(p)(y) > 0 at sphere points p. Realized by
  /// T(g~(z)) for every motion.
  kRadiusSignRule,
  /// Conjugate the continuation for orientation-reversing motions:
  /// T(conj(g~(z))). This is the action under which s_map is equivariant for
  /// tangent_action.
  kConjugateReversing,
};

/// Image of an oriented sphere contained in the closed ball.
OrientedSphere motion_apply_sphere(const HyperbolicMotion& g, const OrientedSphere& s,
                                   SphereAction action = SphereAction::kRadiusSignRule);

}  // namespace lieball
