#include "lieball/geom_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lieball/errors.hpp"
#include "lieball/moebius.hpp"

namespace lieball {

Complex q_form(const CplxPoint& z) { return (z.array() * z.array()).sum(); }

Complex bilinear_dot(const CplxPoint& z, const CplxPoint& w) {
  return (z.array() * w.array()).sum();
}

double lie_gauge(const CplxPoint& z) {
  const RealVec x = z.real();
  const RealVec y = z.imag();
  // |x|^2 |y|^2 - (x.y)^2 as a sum of squared 2x2 minors (Lagrange identity).
  double wedge2 = 0.0;
  const auto n = x.size();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double m = x[i] * y[j] - x[j] * y[i];
      wedge2 += m * m;
    }
  return x.squaredNorm() + y.squaredNorm() + 2.0 * std::sqrt(wedge2);
}

BallClassification classify(const CplxPoint& z, double tol) {
  const double g = lie_gauge(z);
  if (g < 1.0 - tol) return {BallClass::kInterior, g};
  if (g > 1.0 + tol) return {BallClass::kExterior, g};
  return {BallClass::kBoundary, g};
}

std::string_view to_string(BallClass cls) {
  switch (cls) {
    case BallClass::kInterior: return "interior";
    case BallClass::kBoundary: return "boundary";
    case BallClass::kExterior: return "exterior";
  }
  return "unknown";
}

void require_in_ball(const RealPoint& p, std::string_view what) {
  if (!p.allFinite() || p.squaredNorm() >= 1.0)
    throw DomainError(std::string(what) + " must lie in the open unit ball");
}

double hyp_distance(const RealPoint& p, const RealPoint& q) {
  require_in_ball(p, "hyp_distance: p");
  require_in_ball(q, "hyp_distance: q");
  if (p.size() != q.size()) throw DomainError("hyp_distance: dimension mismatch");
  // |delta_p(q)|^2 = D / (D + E) with D = |p - q|^2, E = (1 - |p|^2)(1 - |q|^2),
  // and artanh r = log1p(r) + log1p(D / E) / 2 without forming 1 - r.
  const double d2 = (p - q).squaredNorm();
  if (d2 == 0.0) return 0.0;
  const double e = (1.0 - p.squaredNorm()) * (1.0 - q.squaredNorm());
  const double r = std::sqrt(d2 / (d2 + e));
  return std::log1p(r) + 0.5 * std::log1p(d2 / e);
}

RealPoint hyp_midpoint(const RealPoint& p, const RealPoint& q) {
  require_in_ball(p, "hyp_midpoint: p");
  require_in_ball(q, "hyp_midpoint: q");
  if (p.size() != q.size()) throw DomainError("hyp_midpoint: dimension mismatch");
  // Normalized sum of the hyperboloid lifts, scaled by (1 - |p|^2)(1 - |q|^2).
  // Every term is positive, so points close to the sphere at infinity keep
  // their accuracy.
  const double alpha = 1.0 - p.squaredNorm();
  const double beta = 1.0 - q.squaredNorm();
  const double time = (2.0 - alpha) * beta + (2.0 - beta) * alpha;
  const double norm = 2.0 * std::sqrt(alpha * beta * (alpha * beta + (p - q).squaredNorm()));
  return 2.0 * (beta * p + alpha * q) / (time + norm);
}

CplxPoint make_complex(const RealVec& re, const RealVec& im) {
  CplxPoint z(re.size());
  z.real() = re;
  z.imag() = im;
  return z;
}

}  // namespace lieball
