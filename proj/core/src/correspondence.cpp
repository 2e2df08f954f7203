#include "lieball/correspondence.hpp"

#include <cmath>
#include <string>

#include "lieball/errors.hpp"
#include "lieball/geom_core.hpp"
#include "lieball/moebius.hpp"

namespace lieball {

namespace {

// Largest |Re delta_x(z)| accepted by theta_inv before it reports a mismatch.
constexpr double kMismatchTol = 1e-7;

// Unit vector orthogonal to the unit vector `u`, in span{x, u} when x is not parallel to u.
RealVec orthogonal_in_plane(const RealVec& x, const RealVec& u) {
  RealVec w = x - x.dot(u) * u;
  const double norm = w.norm();
  // Below this the projection is rounding noise. Near parallel, any choice
  // orthogonal to u is off by O(norm) in the symmetry it exploits.
  if (norm > 1e-12 * x.norm()) {
    // Second projection: when x is nearly parallel to u the first one leaves
    // a relative error of order eps |x| / norm along u.
    w /= norm;
    w -= w.dot(u) * u;
    return w.normalized();
  }
  // x parallel to u (or zero): every direction orthogonal to u is a symmetry axis.
  Eigen::Index k = 0;
  u.cwiseAbs().minCoeff(&k);
  w = RealVec::Unit(u.size(), k);
  w -= w.dot(u) * u;
  return w.normalized();
}

void require_same_dim(const TangentVector& tv, std::string_view what) {
  if (tv.x.size() != tv.v.size() || tv.x.size() < 2)
    throw DomainError(std::string(what) + ": inconsistent dimensions");
}

}  // namespace

OrientedSphere t_map(const CplxPoint& z) { return {z.real(), z.imag()}; }

CplxPoint t_inv(const OrientedSphere& s) {
  if (s.center.size() != s.radius_vector.size()) throw DomainError("t_inv: dimension mismatch");
  return make_complex(s.center, s.radius_vector);
}

std::pair<RealPoint, RealPoint> point_pair(const OrientedSphere& s) {
  if (s.dim() != 2) throw DomainError("point_pair: only defined for n = 2");
  // z1 + i z2 = (x1 - y2) + i (x2 + y1), i.e. x + J y with J the quarter turn.
  const RealVec jy = (RealVec(2) << -s.radius_vector[1], s.radius_vector[0]).finished();
  return {s.center + jy, s.center - jy};
}

bool sphere_contains_point(const CplxPoint& z, const RealPoint& a, double tol) {
  if (z.size() != a.size()) throw DomainError("sphere_contains_point: dimension mismatch");
  const CplxPoint d = z - a.cast<Complex>();
  return std::abs(q_form(d)) <= tol * (1.0 + z.squaredNorm() + a.squaredNorm());
}

CplxPoint theta(const TangentVector& tv) {
  require_same_dim(tv, "theta");
  require_in_ball(tv.x, "theta: base point");
  const double r = tv.v.norm();
  if (r == 0.0) return tv.x.cast<Complex>();
  const double hyp_len = r / (1.0 - tv.x.squaredNorm());
  const CplxPoint zp = make_complex(RealVec::Zero(tv.dim()), -tv.v * (std::tanh(hyp_len) / r));
  return delta_apply(tv.x, zp);
}

TangentVector theta_inv(const CplxPoint& z, double tol) {
  if (z.size() < 2) throw DomainError("theta_inv: dimension must be at least 2");
  if (classify(z, tol).cls != BallClass::kInterior)
    throw NotInteriorError("theta_inv: point is not in the open Lie ball");
  const RealVec xe = z.real();
  const RealVec y = z.imag();
  const int n = static_cast<int>(z.size());
  if (y.isZero(0.0)) return {xe, RealVec::Zero(n)};

  const double r = y.norm();
  const RealVec w = orthogonal_in_plane(xe, y / r);
  const RealPoint q_minus = xe - r * w;
  const RealPoint q_plus = xe + r * w;
  const RealPoint x = hyp_midpoint(q_minus, q_plus);

  const CplxPoint zp = delta_apply(x, z);
  const double re_norm = zp.real().norm();
  if (re_norm > kMismatchTol)
    throw ConstructionMismatchError("theta_inv: |Re delta_x(z)| = " + std::to_string(re_norm));
  const RealVec im = zp.imag();
  const double tau = im.norm();
  if (tau >= 1.0) throw NotInteriorError("theta_inv: point is numerically on the boundary");
  if (tau == 0.0) return {x, RealVec::Zero(n)};
  return {x, -(1.0 - x.squaredNorm()) * std::atanh(tau) * (im / tau)};
}

OrientedSphere s_map(const TangentVector& tv) { return t_map(theta(tv)); }

TangentVector s_inv(const OrientedSphere& s) { return theta_inv(t_inv(s)); }

EuclideanSphere sphere_hyp_to_euc(const HyperbolicSphere& s) {
  require_in_ball(s.center, "sphere_hyp_to_euc: center");
  if (!(s.radius > 0.0)) throw DomainError("sphere_hyp_to_euc: radius must be positive");
  const double c2 = s.center.squaredNorm();
  const double hyp_radius = s.radius / (1.0 - c2);
  const double alpha = std::tanh(hyp_radius);
  const double sech = 1.0 / std::cosh(hyp_radius);
  const double den = 1.0 - c2 * alpha * alpha;
  return {s.center * (sech * sech / den), (1.0 - c2) * alpha / den};
}

HyperbolicSphere sphere_euc_to_hyp(const EuclideanSphere& s) {
  if (!(s.radius > 0.0)) throw DomainError("sphere_euc_to_hyp: radius must be positive");
  const double e = s.center.norm();
  const double near = e - s.radius;
  const double far = e + s.radius;
  if (!(far < 1.0)) throw DomainError("sphere_euc_to_hyp: sphere is not contained in the ball");
  // The diameter through the origin has hyperbolic coordinates artanh(e -+ r_e);
  // the hyperbolic center and radius are their midpoint and half-width.
  const double u_near = std::atanh(near);
  const double u_far = std::atanh(far);
  const double t = std::tanh(0.5 * (u_near + u_far));
  const double hyp_radius = 0.5 * (u_far - u_near);
  const RealPoint c = e > 0.0 ? RealPoint(s.center * (t / e)) : RealPoint(s.center);
  return {c, hyp_radius * (1.0 - t * t)};
}

RealPoint farthest_point(const CplxPoint& z) {
  const RealVec x = z.real();
  const RealVec y = z.imag();
  if (y.isZero(0.0)) return x;
  const double r = y.norm();
  return x + r * orthogonal_in_plane(x, y / r);
}

RealPoint boundary_tangency(const CplxPoint& z, double tol) {
  if (classify(z, tol).cls != BallClass::kBoundary)
    throw NotBoundaryError("boundary_tangency: point is not on the Lie-ball boundary");
  return farthest_point(z);
}

}  // namespace lieball
