#include "lieball/moebius.hpp"

#include <cmath>
#include <string>

#include "lieball/correspondence.hpp"
#include "lieball/errors.hpp"
#include "lieball/geom_core.hpp"

namespace lieball {

namespace {

constexpr double kOrthogonalityTol = 1e-12;
constexpr double kPoleTol = 1e-14;

CplxPoint complexify(const RealVec& v) { return v.cast<Complex>(); }

// delta_a evaluated as
//   num = (1 - |a|^2)(a - z) + Q(z - a) a,   den = Q(z - a) + (1 - Q(z))(1 - |a|^2),
// which expand to the textbook numerator and denominator but avoid the
// cancellation of the expanded forms when both a and z approach the sphere at
// infinity.
struct DeltaParts {
  Complex q;    // Q(z)
  Complex za;   // z . a
  Complex den;  // Q(z)|a|^2 - 2 z.a + 1
  CplxPoint value;
};

DeltaParts delta_parts(const RealPoint& a, const CplxPoint& z) {
  if (a.size() != z.size()) throw DomainError("delta: dimension mismatch");
  const double a2 = a.squaredNorm();
  if (a2 >= 1.0) throw DomainError("delta: parameter a must lie in the open unit ball");
  const double one_m_a2 = 1.0 - a2;
  const CplxPoint ac = complexify(a);
  const CplxPoint diff = z - ac;
  DeltaParts p;
  p.q = q_form(z);
  p.za = bilinear_dot(z, ac);
  const Complex q_diff = q_form(diff);
  p.den = q_diff + (1.0 - p.q) * one_m_a2;
  const double scale = 1.0 + std::abs(p.q) * a2 + 2.0 * std::abs(p.za);
  if (std::abs(p.den) <= kPoleTol * scale)
    throw SingularDenominatorError("delta: z lies on the isotropic cone of a/|a|^2");
  p.value = (-one_m_a2 * diff + q_diff * ac) / p.den;
  return p;
}

}  // namespace

HyperbolicMotion::HyperbolicMotion(RealMat orthogonal_part, RealPoint translation)
    : rho_(std::move(orthogonal_part)), translation_(std::move(translation)) {
  const auto n = translation_.size();
  if (n < 2) throw DomainError("HyperbolicMotion: dimension must be at least 2");
  if (rho_.rows() != n || rho_.cols() != n)
    throw DomainError("HyperbolicMotion: orthogonal part must be " + std::to_string(n) + "x" +
                      std::to_string(n));
  if (!rho_.allFinite() ||
      (rho_.transpose() * rho_ - RealMat::Identity(n, n)).cwiseAbs().maxCoeff() > kOrthogonalityTol)
    throw DomainError("HyperbolicMotion: orthogonal part is not orthogonal");
  require_in_ball(translation_, "HyperbolicMotion: translation parameter");
  parity_ = rho_.determinant() > 0 ? 1 : -1;
}

HyperbolicMotion HyperbolicMotion::identity(int n) {
  return HyperbolicMotion(-RealMat::Identity(n, n), RealPoint::Zero(n));
}

HyperbolicMotion HyperbolicMotion::involution(const RealPoint& a) {
  const auto n = a.size();
  return HyperbolicMotion(RealMat::Identity(n, n), a);
}

HyperbolicMotion HyperbolicMotion::linear(const RealMat& r) {
  return HyperbolicMotion(-r, RealPoint::Zero(r.rows()));
}

CplxPoint inversion_apply(const Inversion& inv, const CplxPoint& z, double tol) {
  if (!(inv.radius > 0.0)) throw DomainError("inversion: radius must be positive");
  if (inv.center.size() != z.size()) throw DomainError("inversion: dimension mismatch");
  const CplxPoint a = complexify(inv.center);
  const CplxPoint d = z - a;
  const Complex q = q_form(d);
  if (std::abs(q) <= tol)
    throw IsotropicConeError("inversion: point lies on the isotropic cone of the center");
  return a + d * (inv.radius * inv.radius / q);
}

CplxPoint delta_apply(const RealPoint& a, const CplxPoint& z) { return delta_parts(a, z).value; }

RealPoint delta_apply(const RealPoint& a, const RealPoint& x) {
  if (a.size() != x.size()) throw DomainError("delta: dimension mismatch");
  const double a2 = a.squaredNorm();
  if (a2 >= 1.0) throw DomainError("delta: parameter a must lie in the open unit ball");
  const double one_m_a2 = 1.0 - a2;
  const RealVec diff = x - a;
  const double d2 = diff.squaredNorm();
  const double den = d2 + (1.0 - x.squaredNorm()) * one_m_a2;
  if (std::abs(den) <= kPoleTol * (1.0 + x.squaredNorm() * a2 + 2.0 * std::abs(x.dot(a))))
    throw SingularDenominatorError("delta: x coincides with a/|a|^2");
  return (d2 * a - one_m_a2 * diff) / den;
}

CplxMat delta_jacobian(const RealPoint& a, const CplxPoint& z) {
  const DeltaParts p = delta_parts(a, z);
  const auto n = a.size();
  const double a2 = a.squaredNorm();
  const CplxPoint ac = complexify(a);
  const CplxPoint& f = p.value;
  const CplxMat dnum = (a2 - 1.0) * CplxMat::Identity(n, n) + 2.0 * ac * z.transpose() -
                       2.0 * ac * ac.transpose();
  const Eigen::RowVectorXcd dden = 2.0 * a2 * z.transpose() - 2.0 * ac.transpose();
  return (dnum - f * dden) / p.den;
}

RealMat delta_jacobian(const RealPoint& a, const RealPoint& x) {
  return delta_jacobian(a, CplxPoint(complexify(x))).real();
}

CplxMat delta_param_jacobian(const RealPoint& a, const CplxPoint& z) {
  const DeltaParts p = delta_parts(a, z);
  const auto n = a.size();
  const CplxPoint ac = complexify(a);
  const CplxPoint& f = p.value;
  const CplxMat dnum = 2.0 * z * ac.transpose() +
                       (1.0 + p.q - 2.0 * p.za) * CplxMat::Identity(n, n) -
                       2.0 * ac * z.transpose();
  const Eigen::RowVectorXcd dden = 2.0 * p.q * ac.transpose() - 2.0 * z.transpose();
  return (dnum - f * dden) / p.den;
}

RealMat delta_second_derivative(const RealPoint& a, const RealPoint& x, const RealVec& w) {
  const double a2 = a.squaredNorm();
  const double den = (x - a).squaredNorm() + (1.0 - x.squaredNorm()) * (1.0 - a2);
  const RealPoint f = delta_apply(a, x);
  const RealMat jac = delta_jacobian(a, x);
  const RealVec dden = 2.0 * a2 * x - 2.0 * a;  // gradient of the denominator
  const RealVec jw = jac * w;
  return (2.0 * (a - a2 * f) * w.transpose() - dden.dot(w) * jac - jw * dden.transpose()) / den;
}

CplxPoint motion_apply(const HyperbolicMotion& g, const CplxPoint& z) {
  return g.orthogonal_part().cast<Complex>() * delta_apply(g.translation_param(), z);
}

RealPoint motion_apply(const HyperbolicMotion& g, const RealPoint& x) {
  return g.orthogonal_part() * delta_apply(g.translation_param(), x);
}

RealPoint motion_apply_inverse(const HyperbolicMotion& g, const RealPoint& y) {
  return delta_apply(g.translation_param(), RealPoint(g.orthogonal_part().transpose() * y));
}

RealMat motion_differential(const HyperbolicMotion& g, const RealPoint& x) {
  return g.orthogonal_part() * delta_jacobian(g.translation_param(), x);
}

HyperbolicMotion motion_compose(const HyperbolicMotion& g1, const HyperbolicMotion& g2) {
  const int n = g1.dim();
  if (g2.dim() != n) throw DomainError("motion_compose: dimension mismatch");
  // The composite c sends a to 0, and c o delta_a = rho is linear, so
  // rho = dc(a) d(delta_a)(0) = dc(a) (|a|^2 - 1).
  const RealPoint a = motion_apply_inverse(g2, motion_apply_inverse(g1, RealPoint::Zero(n)));
  const RealMat dc = motion_differential(g1, motion_apply(g2, a)) * motion_differential(g2, a);
  const RealMat rho = dc * (a.squaredNorm() - 1.0);
  Eigen::JacobiSVD<RealMat> svd(rho, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return HyperbolicMotion(svd.matrixU() * svd.matrixV().transpose(), a);
}

HyperbolicMotion motion_inverse(const HyperbolicMotion& g) {
  // delta_{rho a}(x) = rho delta_a(rho^T x), hence (rho delta_a)^-1 = rho^T delta_{rho a}.
  const RealMat& rho = g.orthogonal_part();
  return HyperbolicMotion(rho.transpose(), rho * g.translation_param());
}

int motion_parity(const HyperbolicMotion& g) {
  return (g.dim() % 2 == 0) ? g.parity() : -g.parity();
}

TangentVector tangent_action(const HyperbolicMotion& g, const TangentVector& tv) {
  require_in_ball(tv.x, "tangent_action: base point");
  const double eps = motion_parity(g);
  return {motion_apply(g, tv.x), eps * (motion_differential(g, tv.x) * tv.v)};
}

OrientedSphere motion_apply_sphere(const HyperbolicMotion& g, const OrientedSphere& s,
                                   SphereAction action) {
  const CplxPoint z = t_inv(s);
  if (classify(z).cls == BallClass::kExterior)
    throw DomainError("motion_apply_sphere: sphere is not contained in the closed ball");
  CplxPoint w = motion_apply(g, z);
  if (action == SphereAction::kConjugateReversing && motion_parity(g) < 0) w = w.conjugate();
  return t_map(w);
}

}  // namespace lieball
