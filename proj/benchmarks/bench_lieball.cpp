#include <benchmark/benchmark.h>

#include "lieball/correspondence.hpp"
#include "lieball/metric.hpp"
#include "lieball/oracles.hpp"
#include "lieball/random.hpp"

namespace lb = lieball;

namespace {

lb::TangentVector sample(int n) {
  lb::Rng rng(17);
  return lb::oracles::random_tangent_vector(rng, n, 0.9, 3.0);
}

void BM_Theta(benchmark::State& state) {
  const auto tv = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lb::theta(tv));
}
BENCHMARK(BM_Theta)->Arg(3)->Arg(8);

void BM_ThetaInv(benchmark::State& state) {
  const auto z = lb::theta(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(lb::theta_inv(z));
}
BENCHMARK(BM_ThetaInv)->Arg(3)->Arg(8);

void BM_MetricAt(benchmark::State& state) {
  const auto tv = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lb::metric_at(tv));
}
BENCHMARK(BM_MetricAt)->Arg(3)->Arg(8);

void BM_ChristoffelFd(benchmark::State& state) {
  const auto tv = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lb::christoffel_fd(tv));
}
BENCHMARK(BM_ChristoffelFd)->Arg(3);

void BM_Geodesic(benchmark::State& state) {
  const int n = 3;
  const auto tv = sample(n);
  lb::RealVec w = lb::RealVec::Zero(2 * n);
  w[n] = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(lb::geodesic_integrate(tv, w, 0.1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Geodesic)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
