// Hot paths: the tridiagonal eigensolve behind every parameter-spectrum scan,
// the level search itself, and the complex-rotation pipeline.

#include <benchmark/benchmark.h>

#include "trapps/cs.hpp"
#include "trapps/eigen_kernels.hpp"
#include "trapps/pps.hpp"
#include "trapps/tra.hpp"

using namespace trapps;

static void BM_sigma_eigensolve(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto bp = basis_params(-11.3, 1.0);
  for (auto _ : state) {
    auto S = build_sigma(bp, 2.0, N);
    auto e = eig_sym_tridiag(S);
    benchmark::DoNotOptimize(e.values);
  }
}
BENCHMARK(BM_sigma_eigensolve)->Arg(50)->Arg(100)->Arg(200);

static void BM_pps_spectrum(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = pps_spectrum(1.0, -50.0, 2.0, N);
    benchmark::DoNotOptimize(s.levels);
  }
}
BENCHMARK(BM_pps_spectrum)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_potential_matrix(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto p = params_from_u(1.0, 2.0, -80.0, 120.0);
  auto cfg = make_cs_config(p, 0, 40.0, 0.8, N);
  for (auto _ : state) {
    auto V = cs_potential_matrix(p, cfg);
    benchmark::DoNotOptimize(V);
  }
}
BENCHMARK(BM_potential_matrix)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_harris(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto p = params_from_u(1.0, 2.0, -80.0, 120.0);
  for (auto _ : state) {
    auto h = harris_eigenvalues(p, make_cs_config(p, 0, 40.0, 0.8, N));
    benchmark::DoNotOptimize(h.values);
  }
}
BENCHMARK(BM_harris)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
