#include "lieball_cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lieball/correspondence.hpp"
#include "lieball/errors.hpp"
#include "lieball/geom_core.hpp"
#include "lieball/metric.hpp"
#include "lieball/moebius.hpp"
#include "lieball/random.hpp"

namespace lieball::cli {
namespace {

using oracles::random_motion;
using oracles::random_tangent_vector;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Keeps NaN sticky as infinity so a broken trial cannot hide behind max().
struct Worst {
  double value = 0.0;
  void operator()(double e) { value = std::isnan(e) ? kInf : std::max(value, e); }
  void fail() { value = kInf; }
};

CplxPoint complexify(const RealVec& x) { return x.cast<Complex>(); }

double max_abs(const CplxPoint& z) { return z.size() == 0 ? 0.0 : z.cwiseAbs().maxCoeff(); }

// Geodesic suites integrate one path per this many trials.
int path_count(int trials) { return std::max(1, trials / 20); }

SuiteResult gauge_real_slice(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const RealPoint x = rng.in_ball(c.n, 1.0);
    const auto cls = classify(complexify(x));
    if (cls.cls != BallClass::kInterior) w.fail();
    w(std::abs(cls.gauge - x.squaredNorm()));
  }
  return {w.value, c.trials};
}

SuiteResult gauge_phase(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const CplxPoint z = oracles::random_lie_point(rng, c.n, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    w(std::abs(lie_gauge(std::polar(1.0, phi) * z) - lie_gauge(z)));
  }
  return {w.value, c.trials};
}

// Farthest squared norm on the sphere with center x, radius |y|, in the plane
// orthogonal to y: |x|^2 + r^2 + 2 r |P x|, P the projection onto y-perp.
// Sampled points must never exceed it.
SuiteResult gauge_farthest(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const CplxPoint z = oracles::random_lie_point(rng, c.n, 0.999);
    const RealVec x = z.real();
    const RealVec y = z.imag();
    const double r = y.norm();
    const RealVec px = x - x.dot(y) / y.squaredNorm() * y;
    const double expected = x.squaredNorm() + r * r + 2.0 * r * px.norm();
    const double g = lie_gauge(z);
    w(std::abs(g - expected));
    const auto samples = oracles::sample_sphere(t_map(z), 64, c.seed + static_cast<std::uint64_t>(t));
    for (const auto& a : samples.points) w(std::max(0.0, a.squaredNorm() - g - 1e-12));
  }
  return {w.value, c.trials};
}

SuiteResult distance(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const RealPoint p = rng.in_ball(c.n, 0.95);
    const RealPoint q = rng.in_ball(c.n, 0.95);
    const RealPoint r = rng.in_ball(c.n, 0.95);
    const double pq = hyp_distance(p, q);
    w(std::max(0.0, hyp_distance(p, r) - pq - hyp_distance(q, r)));
    const HyperbolicMotion g = random_motion(rng, c.n);
    w(std::abs(hyp_distance(motion_apply(g, p), motion_apply(g, q)) - pq));
  }
  return {w.value, c.trials};
}

SuiteResult q_ratio(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const CplxPoint z = rng.complex_normal_vector(c.n);
    const CplxPoint zp = rng.complex_normal_vector(c.n);
    const Complex qz = q_form(z);
    const Complex qzp = q_form(zp);
    const Complex lhs = q_form(z / qz - zp / qzp) * qz * qzp;
    const Complex rhs = q_form(z - zp);
    w(std::abs(lhs - rhs) / std::abs(rhs));
  }
  return {w.value, c.trials};
}

SuiteResult setwise_image(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const CplxPoint z = oracles::random_lie_point(rng, c.n, 0.999);
    const HyperbolicMotion g = random_motion(rng, c.n);
    const CplxPoint image = t_inv(motion_apply_sphere(g, t_map(z)));
    const auto samples = oracles::sample_sphere(t_map(z), 50, c.seed + static_cast<std::uint64_t>(t));
    for (const auto& a : samples.points)
      w(std::abs(q_form(image - complexify(motion_apply(g, a)))));
  }
  return {w.value, c.trials};
}

SuiteResult involutions(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const Inversion inv{rng.normal_vector(c.n), rng.uniform(0.2, 2.0)};
    const CplxPoint z = rng.complex_normal_vector(c.n);
    const CplxPoint back = inversion_apply(inv, inversion_apply(inv, z));
    w(max_abs(back - z) / (1.0 + max_abs(z)));
    const RealPoint a = rng.in_ball(c.n, 0.95);
    const CplxPoint u = oracles::random_lie_point(rng, c.n, 1.0);
    w(max_abs(delta_apply(a, delta_apply(a, u)) - u));
  }
  return {w.value, c.trials};
}

SuiteResult conformality(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const HyperbolicMotion g = random_motion(rng, c.n);
    const RealPoint p = rng.in_ball(c.n, 0.9);
    w(oracles::conformality_check(g, p).deviation);
  }
  return {w.value, c.trials};
}

SuiteResult closed_ball(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const CplxPoint z = oracles::random_boundary_point(rng, c.n);
    const HyperbolicMotion g = random_motion(rng, c.n);
    w(std::abs(lie_gauge(motion_apply(g, z)) - 1.0));
  }
  return {w.value, c.trials};
}

SuiteResult diffeomorphism(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const TangentVector tv = random_tangent_vector(rng, c.n);
    const TangentVector back = theta_inv(theta(tv));
    w(std::max((back.x - tv.x).cwiseAbs().maxCoeff(), (back.v - tv.v).cwiseAbs().maxCoeff()));
    const CplxPoint z = oracles::random_lie_point(rng, c.n, 0.999);
    w(max_abs(theta(theta_inv(z)) - z));
  }
  return {w.value, c.trials};
}

// Error is |1 - gauge| at hyperbolic length 20 along rays from the origin, and
// 1 for any out-of-range image or non-monotone gauge along a ray.
SuiteResult range(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const TangentVector tv = random_tangent_vector(rng, c.n);
    if (!(lie_gauge(theta(tv)) < 1.0)) w.fail();
    const RealVec u = rng.unit_vector(c.n);
    const RealPoint origin = RealPoint::Zero(c.n);
    double prev = 0.0;
    for (double len : {5.0, 10.0, 20.0}) {
      const double g = lie_gauge(theta({origin, len * u}));
      // At t = 20 the exact gauge is within 1e-16 of 1, below double resolution.
      if (!(g >= prev) || (len < 20.0 && !(g < 1.0)) || (len == 5.0 && 1.0 - g > 1e-3)) w(1.0);
      prev = g;
    }
    w(std::abs(1.0 - prev));
  }
  return {w.value, c.trials};
}

SuiteResult equivariance(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const TangentVector tv = random_tangent_vector(rng, c.n);
    const HyperbolicMotion g = random_motion(rng, c.n, t % 2 == 0 ? 1 : -1);
    const CplxPoint lhs = theta(tangent_action(g, tv));
    CplxPoint rhs = motion_apply(g, theta(tv));
    if (motion_parity(g) < 0) rhs = rhs.conjugate();
    w(max_abs(lhs - rhs));
  }
  return {w.value, c.trials};
}

SuiteResult zero_section(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const RealPoint x = rng.in_ball(c.n, 1.0);
    const CplxPoint z = theta({x, RealVec::Zero(c.n)});
    w(max_abs(z - complexify(x)));
  }
  return {w.value, c.trials};
}

SuiteResult leaf(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const RealVec u = rng.unit_vector(c.n);
    const double s = rng.uniform(-0.95, 0.95);
    const double len = rng.uniform(-5.0, 5.0);
    const double tau = std::tanh(len / (1.0 - s * s));
    const Complex expected = Complex(s, tau) / Complex(1.0, s * tau);
    w(max_abs(theta({s * u, len * u}) - expected * complexify(u)));
  }
  return {w.value, c.trials};
}

// Sampled points of s_map(x, v) sit at hyperbolic distance |v| / (1 - |x|^2)
// from x, and delta_x maps them into the linear hyperplane orthogonal to v.
SuiteResult s_map_contract(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const TangentVector tv = random_tangent_vector(rng, c.n, 0.9, 3.0);
    if (tv.v.isZero(0.0)) continue;
    const double radius = tv.hyperbolic_length();
    const RealVec u = tv.v.normalized();
    const auto samples = oracles::sample_sphere(s_map(tv), 20, c.seed + static_cast<std::uint64_t>(t));
    for (const auto& a : samples.points) {
      w(std::abs(hyp_distance(tv.x, a) - radius));
      w(std::abs(delta_apply(tv.x, a).dot(u)));
    }
  }
  return {w.value, c.trials};
}

SuiteResult newton_cross_check(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const TangentVector tv = random_tangent_vector(rng, c.n, 0.9, 3.0);
    const CplxPoint z = theta(tv);
    const TangentVector guess{tv.x + 1e-3 * rng.normal_vector(c.n), tv.v + 1e-3 * rng.normal_vector(c.n)};
    const TangentVector a = oracles::newton_theta_inv(z, guess);
    const TangentVector b = theta_inv(z);
    w(std::max((a.x - b.x).cwiseAbs().maxCoeff(), (a.v - b.v).cwiseAbs().maxCoeff()));
  }
  return {w.value, c.trials};
}

SuiteResult sampling_reproducible(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const OrientedSphere s = t_map(oracles::random_lie_point(rng, c.n, 1.0));
    const std::uint64_t seed = rng.next_u64();
    const auto a = oracles::sample_sphere(s, 10, seed);
    const auto b = oracles::sample_sphere(s, 10, seed);
    for (std::size_t i = 0; i < a.points.size(); ++i)
      if (a.points[i] != b.points[i]) w.fail();
    for (const auto& p : a.points) w(std::abs(q_form(t_inv(s) - complexify(p))));
  }
  return {w.value, c.trials};
}

SuiteResult jacobian(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const TangentVector tv = random_tangent_vector(rng, c.n, 0.9, 2.0);
    const int n = c.n;
    const oracles::VectorMap f = [n](const RealVec& p) {
      const CplxPoint z = theta({p.head(n), p.tail(n)});
      RealVec out(2 * n);
      out << z.real(), z.imag();
      return out;
    };
    RealVec p(2 * n);
    p << tv.x, tv.v;
    w((theta_jacobian(tv) - oracles::fd_jacobian(f, p)).cwiseAbs().maxCoeff());
  }
  return {w.value, c.trials};
}

// Relative to the largest metric entry, which grows like e^(4|v|).
SuiteResult metric_equivariance(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const TangentVector tv = random_tangent_vector(rng, c.n, 0.8, 2.0);
    const HyperbolicMotion g = random_motion(rng, c.n, 1, 0.8);
    const RealMat d = bundle_differential(g, tv);
    const RealMat pulled = d.transpose() * metric_at(tangent_action(g, tv)).matrix * d;
    const RealMat direct = metric_at(tv).matrix;
    w((pulled - direct).cwiseAbs().maxCoeff() / std::max(1.0, direct.cwiseAbs().maxCoeff()));
  }
  return {w.value, c.trials};
}

// Leaf coordinates (s, t) -> (s u, t u). The metric pulled back to the leaf
// must be C |dw|^2 / (1 - |w|^2)^2 with C fixed at w = 0.
SuiteResult leaf_disk(const SuiteConfig& c) {
  auto leaf_metric = [&](const RealVec& u, double s, double len) {
    const RealMat g = metric_at({s * u, len * u}).matrix;
    RealMat e = RealMat::Zero(2 * c.n, 2);
    e.col(0).head(c.n) = u;
    e.col(1).tail(c.n) = u;
    return RealMat(e.transpose() * g * e);
  };
  auto disk_metric = [](double s, double len) {
    const Complex w = leaf_embed(s, len);
    const auto [ws, wt] = leaf_embed_derivatives(s, len);
    const double f = 1.0 / std::pow(1.0 - std::norm(w), 2);
    RealMat m(2, 2);
    m << std::norm(ws) * f, (ws * std::conj(wt)).real() * f, (ws * std::conj(wt)).real() * f,
        std::norm(wt) * f;
    return m;
  };
  Worst w;
  Rng first = Rng::stream(c.seed, 0);
  const RealVec u0 = first.unit_vector(c.n);
  const double constant = leaf_metric(u0, 0.0, 0.0)(0, 0) / disk_metric(0.0, 0.0)(0, 0);
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const RealVec u = rng.unit_vector(c.n);
    const double s = rng.uniform(-0.9, 0.9);
    const double len = rng.uniform(-2.0, 2.0);
    const RealMat actual = leaf_metric(u, s, len);
    const RealMat expected = constant * disk_metric(s, len);
    w((actual - expected).cwiseAbs().maxCoeff() / expected.cwiseAbs().maxCoeff());
  }
  return {w.value, c.trials};
}

RealVec unit_energy(const TangentVector& p, RealVec velocity) {
  return velocity / std::sqrt(geodesic_energy(p, velocity));
}

SuiteResult fiber_totally_geodesic(const SuiteConfig& c) {
  Worst w;
  const int paths = path_count(c.trials);
  for (int t = 0; t < paths; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const TangentVector start{RealPoint::Zero(c.n), 0.5 * rng.in_ball(c.n, 1.0)};
    RealVec vel = RealVec::Zero(2 * c.n);
    vel.tail(c.n) = rng.unit_vector(c.n);
    const auto path = geodesic_integrate(start, unit_energy(start, vel), 1.0, 200);
    for (const auto& s : path.samples) w(s.point.x.norm());
  }
  return {w.value, paths};
}

// Rays through 0 in a fiber are pregeodesics; at the origin fiber the
// integrated geodesic also stays on its line.
SuiteResult vector_line(const SuiteConfig& c) {
  Worst w;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const RealPoint x = rng.in_ball(c.n, 0.8);
    const RealVec u = rng.unit_vector(c.n);
    const double len = rng.uniform(0.0, 2.0);
    RealVec vel = RealVec::Zero(2 * c.n);
    vel.tail(c.n) = u;
    w(pregeodesic_residual({x, len * (1.0 - x.squaredNorm()) * u}, vel));
  }
  const int paths = path_count(c.trials);
  for (int t = 0; t < paths; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const RealVec u = rng.unit_vector(c.n);
    const TangentVector start{RealPoint::Zero(c.n), RealVec::Zero(c.n)};
    RealVec vel = RealVec::Zero(2 * c.n);
    vel.tail(c.n) = u;
    const auto path = geodesic_integrate(start, vel, 1.0, 200);
    for (const auto& s : path.samples) {
      w(s.point.x.norm());
      w((s.point.v - s.point.v.dot(u) * u).norm());
    }
  }
  return {w.value, c.trials};
}

SuiteResult energy(const SuiteConfig& c) {
  Worst w;
  const int paths = path_count(c.trials);
  for (int t = 0; t < paths; ++t) {
    Rng rng = Rng::stream(c.seed, t);
    const TangentVector start = random_tangent_vector(rng, c.n, 0.5, 1.0);
    const RealVec vel = unit_energy(start, rng.normal_vector(2 * c.n));
    const auto path = geodesic_integrate(start, vel, 1.0, 1000);
    const auto& last = path.samples.back();
    w(std::abs(geodesic_energy(last.point, last.velocity) - 1.0));
  }
  return {w.value, paths};
}

std::vector<Suite> make_suites() {
  return {
      {"gauge-real-slice", "real ball points are interior with gauge |x|^2", 0.0, gauge_real_slice},
      {"gauge-phase", "gauge is invariant under z -> e^(i phi) z", 1e-12, gauge_phase},
      {"gauge-farthest", "gauge is the squared norm of the farthest point of T(z)", 1e-9,
       gauge_farthest},
      {"distance", "triangle inequality and motion invariance of hyp_distance", 1e-9, distance},
      {"q-ratio", "Q(z/Q(z) - w/Q(w)) Q(z) Q(w) = Q(z - w), relative", 1e-10, q_ratio},
      {"setwise-image", "mapped sphere points lie on the transported sphere", 1e-9, setwise_image},
      {"involutions", "inversions and delta_a are involutive", 1e-10, involutions},
      {"conformality", "finite-difference Jacobians of motions are conformal", 1e-6, conformality},
      {"closed-ball", "motions preserve the Lie-ball boundary", 1e-8, closed_ball},
      {"diffeomorphism", "theta_inv and theta are mutually inverse", 1e-8, diffeomorphism},
      {"range", "theta lands in the Lie ball and reaches its boundary along rays", 1e-7, range},
      {"equivariance", "theta intertwines tangent and holomorphic actions", 1e-8, equivariance},
      {"zero-section", "theta(x, 0) = x", 0.0, zero_section},
      {"leaf", "theta(s u, t u) = (s + i tau) / (1 + i s tau) u", 1e-10, leaf},
      {"s-map", "s_map spheres have the prescribed hyperbolic center and radius", 1e-8,
       s_map_contract},
      {"newton", "Newton inversion agrees with theta_inv", 1e-8, newton_cross_check},
      {"sampling", "sphere sampling is reproducible and exact", 1e-12, sampling_reproducible},
      {"jacobian", "theta_jacobian matches finite differences", 1e-6, jacobian},
      {"metric-equivariance", "metric is invariant under orientation-preserving motions", 1e-7,
       metric_equivariance},
      {"leaf-disk", "leaf metric is a constant multiple of the Poincare disk metric", 1e-6,
       leaf_disk},
      {"fiber-geodesic", "the fiber over the origin is totally geodesic", 1e-6,
       fiber_totally_geodesic},
      {"vector-line", "lines through 0 in a fiber are geodesics", 1e-6, vector_line},
      {"energy", "energy drift over 1000 RK4 steps", 1e-7, energy},
  };
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = make_suites();
  return all;
}

const Suite* find_suite(std::string_view name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

oracles::VerificationReport run_suite(const Suite& suite, const SuiteConfig& cfg) {
  oracles::VerificationReport report{suite.name, cfg.n, cfg.trials, cfg.seed, kInf, false};
  try {
    const SuiteResult r = suite.run(cfg);
    report.max_error = r.max_error;
    report.trials = r.trials;
  } catch (const Error&) {
    report.max_error = kInf;
  }
  report.pass = std::isfinite(report.max_error) && report.max_error <= suite.threshold;
  return report;
}

}  // namespace lieball::cli
