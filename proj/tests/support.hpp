#pragma once

#include <gtest/gtest.h>

#include <complex>
#include <initializer_list>

#include "lieball/types.hpp"

namespace lieball::test {

inline RealVec vec(std::initializer_list<double> xs) {
  RealVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline CplxPoint cvec(std::initializer_list<Complex> zs) {
  CplxPoint v(static_cast<Eigen::Index>(zs.size()));
  Eigen::Index i = 0;
  for (Complex z : zs) v[i++] = z;
  return v;
}

inline CplxPoint complexify(const RealVec& x) { return x.cast<Complex>(); }

template <class A, class B>
double max_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

constexpr Complex kI{0.0, 1.0};

}  // namespace lieball::test
