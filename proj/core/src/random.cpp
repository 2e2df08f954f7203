#include "lieball/random.hpp"

#include <cmath>
#include <numbers>

namespace lieball {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL)));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

RealVec Rng::normal_vector(int n) {
  RealVec v(n);
  for (int i = 0; i < n; ++i) v[i] = normal();
  return v;
}

RealVec Rng::unit_vector(int n) {
  RealVec v = normal_vector(n);
  double norm = v.norm();
  while (norm < 1e-8) {
    v = normal_vector(n);
    norm = v.norm();
  }
  return v / norm;
}

RealPoint Rng::in_ball(int n, double radius) {
  return unit_vector(n) * (radius * std::pow(uniform(), 1.0 / n));
}

CplxPoint Rng::complex_normal_vector(int n) {
  CplxPoint z(n);
  for (int i = 0; i < n; ++i) {
    const double re = normal();
    const double im = normal();
    z[i] = Complex(re, im);
  }
  return z;
}

RealMat Rng::orthogonal(int n, int det_sign) {
  RealMat g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = normal();
  Eigen::HouseholderQR<RealMat> qr(g);
  RealMat q = qr.householderQ() * RealMat::Identity(n, n);
  const RealMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  if (det_sign != 0 && (q.determinant() > 0) != (det_sign > 0)) q.col(0) = -q.col(0);
  return q;
}

}  // namespace lieball
