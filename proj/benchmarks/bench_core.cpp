#include <benchmark/benchmark.h>

#include "thetamon/certify.hpp"
#include "thetamon/grid.hpp"
#include "thetamon/kernels.hpp"
#include "thetamon/specfun.hpp"
#include "thetamon/theta.hpp"

namespace {

using namespace thetamon;

void BM_digamma(benchmark::State& state) {
  const double x = state.range(0) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(digamma(EvalPoint(x)));
}
BENCHMARK(BM_digamma)->Arg(10)->Arg(250)->Arg(100000);

void BM_lgamma(benchmark::State& state) {
  const double x = state.range(0) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(lgamma(EvalPoint(x)));
}
BENCHMARK(BM_lgamma)->Arg(10)->Arg(250)->Arg(100000);

void BM_polygamma(benchmark::State& state) {
  const DerivOrder k(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(polygamma(k, EvalPoint(2.5)));
}
BENCHMARK(BM_polygamma)->Arg(1)->Arg(6)->Arg(12);

void BM_theta1(benchmark::State& state) {
  const double x = state.range(0) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(theta1(EvalPoint(x)));
}
BENCHMARK(BM_theta1)->Arg(10)->Arg(10000);

void BM_kernel_rho_prime(benchmark::State& state) {
  const double t = state.range(0) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(kernel_rho_prime(t));
}
BENCHMARK(BM_kernel_rho_prime)->Arg(1)->Arg(500)->Arg(20000);

void BM_theta1_via_kernel(benchmark::State& state) {
  const double x = state.range(0) / 100.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(theta1_via_kernel(EvalPoint(x)));
}
BENCHMARK(BM_theta1_via_kernel)->Arg(1)->Arg(100)->Arg(10000);

void BM_certify_cm_theta1(benchmark::State& state) {
  const auto grid = log_grid(1e-2, 1e2, static_cast<int>(state.range(0)));
  const Evaluator f = [](double x) { return theta1(EvalPoint(x)); };
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_cm(f, "theta1", grid, 8, {0.25, 1.0}));
}
BENCHMARK(BM_certify_cm_theta1)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
