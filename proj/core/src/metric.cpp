#include "lieball/metric.hpp"

#include <cmath>
#include <string>

#include "lieball/correspondence.hpp"
#include "lieball/errors.hpp"
#include "lieball/geom_core.hpp"

namespace lieball {

namespace {

constexpr double kMaxCondition = 1e12;
constexpr double kSeriesCutoff = 1e-2;

// tanh(s) / s
double tanh_over(double s) { return s == 0.0 ? 1.0 : std::tanh(s) / s; }

// (s sech^2 s - tanh s) / s^3, smooth at 0.
double tanh_ratio_derivative(double s) {
  if (s < kSeriesCutoff) {
    const double s2 = s * s;
    return -2.0 / 3.0 + s2 * (8.0 / 15.0 + s2 * (-34.0 / 105.0 + s2 * (496.0 / 2835.0)));
  }
  const double sech = 1.0 / std::cosh(s);
  return (s * sech * sech - std::tanh(s)) / (s * s * s);
}

// (sinh(2r) / 2r - 1) / r^2, smooth at 0.
double sinhc_minus_one_over_r2(double r) {
  if (r < kSeriesCutoff) {
    const double u2 = 4.0 * r * r;
    return 4.0 * (1.0 / 6.0 + u2 * (1.0 / 120.0 + u2 * (1.0 / 5040.0 + u2 / 362880.0)));
  }
  return (std::sinh(2.0 * r) / (2.0 * r) - 1.0) / (r * r);
}

RealMat assemble_real(const CplxMat& dx, const CplxMat& dv) {
  const auto n = dx.rows();
  RealMat j(2 * n, 2 * n);
  j.topLeftCorner(n, n) = dx.real();
  j.topRightCorner(n, n) = dv.real();
  j.bottomLeftCorner(n, n) = dx.imag();
  j.bottomRightCorner(n, n) = dv.imag();
  return j;
}

TangentVector shifted(const TangentVector& tv, int coord, double h) {
  TangentVector out = tv;
  const int n = tv.dim();
  if (coord < n)
    out.x[coord] += h;
  else
    out.v[coord - n] += h;
  return out;
}

void check_velocity(const TangentVector& p, const RealVec& w, std::string_view what) {
  if (w.size() != 2 * p.dim())
    throw DomainError(std::string(what) + ": velocity must have 2n components");
}

}  // namespace

RealMat theta_jacobian(const TangentVector& tv) {
  require_in_ball(tv.x, "theta_jacobian: base point");
  const int n = tv.dim();
  const RealVec& x = tv.x;
  const RealVec& v = tv.v;
  const double r = v.norm();
  const double lambda = 1.0 / (1.0 - x.squaredNorm());
  const double s = lambda * r;

  // z' = -i v g, g = tanh(lambda r) / r.
  const double g = lambda * tanh_over(s);
  const double sech = 1.0 / std::cosh(s);
  const RealMat dg_v = g * RealMat::Identity(n, n) +
                       lambda * lambda * lambda * tanh_ratio_derivative(s) * v * v.transpose();
  const RealMat dg_x = 2.0 * lambda * lambda * sech * sech * v * x.transpose();
  const Complex minus_i(0.0, -1.0);
  const CplxPoint zp = make_complex(RealVec::Zero(n), -g * v);

  const CplxMat jz = delta_jacobian(x, zp);
  const CplxMat ja = delta_param_jacobian(x, zp);
  const CplxMat dx = ja + jz * (minus_i * dg_x.cast<Complex>());
  const CplxMat dv = jz * (minus_i * dg_v.cast<Complex>());
  return assemble_real(dx, dv);
}

OriginBlocks origin_blocks(const RealVec& v) {
  const auto n = v.size();
  const double r = v.norm();
  const RealMat id = RealMat::Identity(n, n);
  const RealMat vvt = v * v.transpose();
  // sinh^2(2r) u u^T = (sinh(2r) / r)^2 v v^T
  const double k1 = r > 0.0 ? std::sinh(2.0 * r) / r : 2.0;
  const double km1 = sinhc_minus_one_over_r2(r);  // (k - 1) / r^2, k = sinh(2r) / 2r
  const double k = 1.0 + km1 * r * r;
  return {id + k1 * k1 * vvt, k * k * id - km1 * (k + 1.0) * vvt};
}

MetricTensor metric_at(const TangentVector& tv) {
  require_in_ball(tv.x, "metric_at: base point");
  if (tv.v.size() != tv.x.size()) throw DomainError("metric_at: inconsistent dimensions");
  const int n = tv.dim();
  // Bundle map of delta_x sends (x, v) to (0, v'), v' = v / (|x|^2 - 1).
  const RealMat d = delta_jacobian(tv.x, tv.x);
  const RealMat m = delta_second_derivative(tv.x, tv.x, tv.v);
  const OriginBlocks b = origin_blocks(d * tv.v);

  RealMat j = RealMat::Zero(2 * n, 2 * n);
  j.topLeftCorner(n, n) = d;
  j.bottomLeftCorner(n, n) = m;
  j.bottomRightCorner(n, n) = d;
  RealMat g0 = RealMat::Zero(2 * n, 2 * n);
  g0.topLeftCorner(n, n) = b.b1;
  g0.bottomRightCorner(n, n) = b.b2;

  RealMat g = j.transpose() * g0 * j;
  g = 0.5 * (g + g.transpose()).eval();
  return {tv, std::move(g)};
}

RealMat bundle_differential(const HyperbolicMotion& g, const TangentVector& tv, bool with_parity) {
  require_in_ball(tv.x, "bundle_differential: base point");
  const int n = tv.dim();
  const double eps = with_parity ? motion_parity(g) : 1.0;
  const RealMat& rho = g.orthogonal_part();
  const RealMat d = motion_differential(g, tv.x);
  const RealMat m = rho * delta_second_derivative(g.translation_param(), tv.x, tv.v);
  RealMat j = RealMat::Zero(2 * n, 2 * n);
  j.topLeftCorner(n, n) = d;
  j.bottomLeftCorner(n, n) = eps * m;
  j.bottomRightCorner(n, n) = eps * d;
  return j;
}

RealVec Christoffel::acceleration(const RealVec& w) const {
  RealVec a = RealVec::Zero(dim_);
  for (int k = 0; k < dim_; ++k) {
    double acc = 0.0;
    for (int i = 0; i < dim_; ++i) {
      const double wi = w[i];
      if (wi == 0.0) continue;
      for (int j = 0; j < dim_; ++j) acc += (*this)(k, i, j) * wi * w[j];
    }
    a[k] = -acc;
  }
  return a;
}

Christoffel christoffel_fd(const TangentVector& tv, double h) {
  const int n = tv.dim();
  const int dim = 2 * n;
  const RealMat g = metric_at(tv).matrix;

  Eigen::SelfAdjointEigenSolver<RealMat> eig(g, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > kMaxCondition)
    throw IllConditionedError("christoffel_fd: metric is near-singular");

  // Scale the step with the distance to the boundary so probes stay inside
  // the ball and the relative accuracy does not degrade near it.
  const double step = h * (1.0 - tv.x.squaredNorm());
  std::vector<RealMat> dg(dim);
  for (int l = 0; l < dim; ++l)
    dg[l] = (metric_at(shifted(tv, l, step)).matrix - metric_at(shifted(tv, l, -step)).matrix) / (2.0 * step);

  // Lowered symbols [ij, l] = (d_i g_jl + d_j g_il - d_l g_ij) / 2.
  const RealMat ginv = g.ldlt().solve(RealMat::Identity(dim, dim));
  Christoffel gamma(dim);
  RealVec lowered(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      for (int l = 0; l < dim; ++l) lowered[l] = 0.5 * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
      const RealVec raised = ginv * lowered;
      for (int k = 0; k < dim; ++k) {
        gamma(k, i, j) = raised[k];
        gamma(k, j, i) = raised[k];
      }
    }
  return gamma;
}

GeodesicPath geodesic_integrate(const TangentVector& start, const RealVec& velocity, double length,
                                int steps, const GeodesicOptions& opts) {
  if (steps < 1) throw DomainError("geodesic_integrate: steps must be positive");
  if (!std::isfinite(length)) throw DomainError("geodesic_integrate: length must be finite");
  check_velocity(start, velocity, "geodesic_integrate");
  const int n = start.dim();
  const double dt = length / steps;

  auto point_of = [n](const RealVec& q) {
    return TangentVector{q.head(n), q.tail(n)};
  };
  auto accel = [&](const RealVec& q, const RealVec& w) -> RealVec {
    if (q.head(n).norm() >= 1.0 - opts.chart_margin)
      throw StepOutError("geodesic_integrate: path left the chart");
    return christoffel_fd(point_of(q), opts.fd_step).acceleration(w);
  };

  RealVec q(2 * n);
  q << start.x, start.v;
  RealVec w = velocity;

  GeodesicPath path;
  path.step = dt;
  path.samples.reserve(static_cast<std::size_t>(steps) + 1);
  path.samples.push_back({start, w});
  for (int s = 0; s < steps; ++s) {
    const RealVec k1q = w;
    const RealVec k1w = accel(q, w);
    const RealVec k2q = w + 0.5 * dt * k1w;
    const RealVec k2w = accel(q + 0.5 * dt * k1q, k2q);
    const RealVec k3q = w + 0.5 * dt * k2w;
    const RealVec k3w = accel(q + 0.5 * dt * k2q, k3q);
    const RealVec k4q = w + dt * k3w;
    const RealVec k4w = accel(q + dt * k3q, k4q);
    q += dt / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    w += dt / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    if (q.head(n).norm() >= 1.0 - opts.chart_margin)
      throw StepOutError("geodesic_integrate: path left the chart");
    path.samples.push_back({point_of(q), w});
  }
  return path;
}

double geodesic_energy(const TangentVector& p, const RealVec& velocity) {
  check_velocity(p, velocity, "geodesic_energy");
  return velocity.dot(metric_at(p).matrix * velocity);
}

double pregeodesic_residual(const TangentVector& p, const RealVec& velocity, double h) {
  check_velocity(p, velocity, "pregeodesic_residual");
  const double w2 = velocity.squaredNorm();
  if (w2 == 0.0) return 0.0;
  const RealVec a = christoffel_fd(p, h).acceleration(velocity);
  const RealVec perp = a - (a.dot(velocity) / w2) * velocity;
  return perp.norm() / w2;
}

Complex leaf_embed(double s, double t) {
  if (!(std::abs(s) < 1.0)) throw DomainError("leaf_embed: |s| must be < 1");
  const double tau = std::tanh(t / (1.0 - s * s));
  return Complex(s, tau) / Complex(1.0, s * tau);
}

std::pair<Complex, Complex> leaf_embed_derivatives(double s, double t) {
  if (!(std::abs(s) < 1.0)) throw DomainError("leaf_embed: |s| must be < 1");
  const double one_m_s2 = 1.0 - s * s;
  const double u = t / one_m_s2;
  const double tau = std::tanh(u);
  const double sech2 = 1.0 / (std::cosh(u) * std::cosh(u));
  const Complex den = Complex(1.0, s * tau) * Complex(1.0, s * tau);
  const Complex dw_ds_fixed_tau = (1.0 + tau * tau) / den;
  const Complex dw_dtau = Complex(0.0, one_m_s2) / den;
  const double dtau_ds = sech2 * 2.0 * s * t / (one_m_s2 * one_m_s2);
  const double dtau_dt = sech2 / one_m_s2;
  return {dw_ds_fixed_tau + dw_dtau * dtau_ds, dw_dtau * dtau_dt};
}

}  // namespace lieball
