#include "lieball/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lieball/correspondence.hpp"
#include "lieball/errors.hpp"
#include "lieball/geom_core.hpp"
#include "lieball/metric.hpp"

namespace lieball::oracles {

namespace {

RealVec stacked_residual(const TangentVector& tv, const CplxPoint& z) {
  const CplxPoint d = theta(tv) - z;
  RealVec r(2 * d.size());
  r << d.real(), d.imag();
  return r;
}

}  // namespace

SampleSet sample_sphere(const OrientedSphere& s, int m, std::uint64_t seed) {
  const int n = s.dim();
  if (s.radius_vector.size() != n) throw DomainError("sample_sphere: dimension mismatch");
  SampleSet out;
  out.seed = seed;
  if (s.is_point()) {
    out.points = {s.center};
  } else if (n == 2) {
    const RealVec jy = (RealVec(2) << -s.radius_vector[1], s.radius_vector[0]).finished();
    out.points = {s.center + jy, s.center - jy};
  } else {
    if (m < n) throw DomainError("sample_sphere: need at least n samples");
    const double r = s.radius();
    const RealMat q = Eigen::HouseholderQR<RealMat>(RealMat(s.radius_vector / r)).householderQ() *
                      RealMat::Identity(n, n);
    const RealMat basis = q.rightCols(n - 1);  // orthonormal basis of radius_vector^perp
    Rng rng(seed);
    out.points.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out.points.push_back(s.center + r * (basis * rng.unit_vector(n - 1)));
  }
  out.count = static_cast<int>(out.points.size());
  return out;
}

SphereFit fit_sphere(const std::vector<RealPoint>& points) {
  if (points.empty()) throw RankDeficientError("fit_sphere: no points");
  const auto n = points.front().size();
  const auto m = static_cast<Eigen::Index>(points.size());

  SphereFit fit;
  if (n == 2) {
    // A 0-sphere: the farthest-apart pair.
    double best = -1.0;
    Eigen::Index bi = 0, bj = 0;
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = i + 1; j < m; ++j) {
        const double d = (points[i] - points[j]).norm();
        if (d > best) best = d, bi = i, bj = j;
      }
    if (!(best > 0.0)) throw RankDeficientError("fit_sphere: need two distinct points");
    const RealVec d = points[bj] - points[bi];
    fit.center = 0.5 * (points[bi] + points[bj]);
    fit.radius = 0.5 * best;
    fit.normal = (RealVec(2) << -d[1], d[0]).finished() / best;
  } else {
    if (m < n + 1) throw RankDeficientError("fit_sphere: need at least n + 1 points");
    RealPoint centroid = RealPoint::Zero(n);
    for (const auto& p : points) centroid += p;
    centroid /= static_cast<double>(m);
    RealMat a(m, n);
    for (Eigen::Index i = 0; i < m; ++i) a.row(i) = (points[i] - centroid).transpose();
    Eigen::JacobiSVD<RealMat> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (!(sv[0] > 0.0) || sv[n - 2] <= 1e-12 * sv[0])
      throw RankDeficientError("fit_sphere: points do not span a hyperplane");
    fit.normal = svd.matrixV().col(n - 1);
    const RealMat basis = svd.matrixV().leftCols(n - 1);

    // In-plane circumcenter: 2 u.c - k = |u|^2 with k = |c|^2 - R^2.
    RealMat lhs(m, n);
    RealVec rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const RealVec u = basis.transpose() * (points[i] - centroid);
      lhs.row(i).head(n - 1) = 2.0 * u.transpose();
      lhs(i, n - 1) = -1.0;
      rhs[i] = u.squaredNorm();
    }
    Eigen::ColPivHouseholderQR<RealMat> qr(lhs);
    if (qr.rank() < n) throw RankDeficientError("fit_sphere: degenerate point configuration");
    const RealVec sol = qr.solve(rhs);
    const RealVec c = sol.head(n - 1);
    const double r2 = c.squaredNorm() - sol[n - 1];
    if (!(r2 > 0.0)) throw RankDeficientError("fit_sphere: no real radius");
    fit.center = centroid + basis * c;
    fit.radius = std::sqrt(r2);
  }

  double sum = 0.0;
  for (const auto& p : points) {
    const RealVec d = p - fit.center;
    const double radial = d.norm() - fit.radius;
    const double off_plane = d.dot(fit.normal);
    sum += radial * radial + off_plane * off_plane;
  }
  fit.residual = std::sqrt(sum / static_cast<double>(m));
  return fit;
}

RealMat fd_jacobian(const VectorMap& f, const RealVec& p, double h) {
  const auto k = p.size();
  RealMat j;
  for (Eigen::Index i = 0; i < k; ++i) {
    RealVec plus = p, minus = p;
    plus[i] += h;
    minus[i] -= h;
    const RealVec col = (f(plus) - f(minus)) / (2.0 * h);
    if (i == 0) j.resize(col.size(), k);
    j.col(i) = col;
  }
  return j;
}

TangentVector newton_theta_inv(const CplxPoint& z, const TangentVector& guess,
                               const NewtonOptions& opts) {
  if (classify(z).cls != BallClass::kInterior)
    throw NotInteriorError("newton_theta_inv: point is not in the open Lie ball");
  const int n = static_cast<int>(z.size());
  TangentVector cur = guess;
  RealVec res = stacked_residual(cur, z);
  double norm = res.norm();
  TangentVector best = cur;
  double best_norm = norm;

  for (int it = 0; it < opts.max_iterations && norm > opts.residual_tol; ++it) {
    const RealVec step = theta_jacobian(cur).partialPivLu().solve(-res);
    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving, lambda *= 0.5) {
      TangentVector trial{cur.x + lambda * step.head(n), cur.v + lambda * step.tail(n)};
      if (trial.x.squaredNorm() >= 1.0) continue;
      const RealVec trial_res = stacked_residual(trial, z);
      const double trial_norm = trial_res.norm();
      if (trial_norm < norm) {
        cur = std::move(trial);
        res = trial_res;
        norm = trial_norm;
        accepted = true;
        break;
      }
    }
    if (norm < best_norm) best = cur, best_norm = norm;
    if (!accepted) break;
  }
  if (best_norm > opts.residual_tol)
    throw NoConvergenceError("newton_theta_inv: residual " + std::to_string(best_norm), best,
                             best_norm);
  return best;
}

Conformality conformality_check(const VectorMap& f, const RealPoint& p, double h) {
  const RealMat j = fd_jacobian(f, p, h);
  const auto n = j.rows();
  const double scale = std::pow(std::abs(j.determinant()), 1.0 / static_cast<double>(n));
  const double dev =
      (j.transpose() * j - scale * scale * RealMat::Identity(n, n)).cwiseAbs().maxCoeff();
  return {scale, dev};
}

Conformality conformality_check(const HyperbolicMotion& g, const RealPoint& p, double h) {
  return conformality_check([&g](const RealVec& x) { return RealVec(motion_apply(g, RealPoint(x))); },
                            p, h);
}

HyperbolicMotion random_motion(Rng& rng, int n, int orientation, double max_translation) {
  if (orientation == 0) orientation = rng.uniform() < 0.5 ? -1 : 1;
  // motion_parity = sign(det rho) (-1)^n
  const int det_sign = (n % 2 == 0) ? orientation : -orientation;
  RealMat rho = rng.orthogonal(n, det_sign);
  return HyperbolicMotion(std::move(rho), rng.in_ball(n, max_translation));
}

TangentVector random_tangent_vector(Rng& rng, int n, double max_base, double max_hyp_length) {
  RealPoint x = rng.in_ball(n, max_base);
  const double len = rng.uniform(0.0, max_hyp_length);
  RealVec v = rng.unit_vector(n) * (len * (1.0 - x.squaredNorm()));
  return {std::move(x), std::move(v)};
}

CplxPoint random_lie_point(Rng& rng, int n, double max_gauge) {
  const CplxPoint u = rng.complex_normal_vector(n);
  const double target = rng.uniform() * max_gauge;
  return u * std::sqrt(target / lie_gauge(u));
}

CplxPoint random_boundary_point(Rng& rng, int n) {
  const CplxPoint u = rng.complex_normal_vector(n);
  return u / std::sqrt(lie_gauge(u));
}

}  // namespace lieball::oracles
