#include <benchmark/benchmark.h>

#include <random>

#include "fano/axioms.hpp"
#include "fano/continuum.hpp"
#include "fano/enumerate.hpp"
#include "fano/transform.hpp"

namespace {

using namespace fano;

SignFn first_member(int n) { return sign_from_mask(LatticeDim(n), 0); }

void BM_BuildKernel(benchmark::State& state) {
  const SignFn sign = first_member(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_kernel(sign));
}
BENCHMARK(BM_BuildKernel)->DenseRange(3, 9, 2)->Arg(16);

void BM_VerifyAll(benchmark::State& state) {
  const FanoKernel k = build_kernel(first_member(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(k));
}
BENCHMARK(BM_VerifyAll)->DenseRange(3, 7, 1)->Unit(benchmark::kMillisecond);

void BM_EnumerateCertified(benchmark::State& state) {
  EnumerationOptions opts;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_kernels(LatticeDim(4), true, opts));
}
BENCHMARK(BM_EnumerateCertified)->Unit(benchmark::kMillisecond);

void BM_WignerRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FanoKernel k = build_kernel(first_member(n));
  std::mt19937_64 rng(1);
  const DensityMatrix rho = random_density_matrix(LatticeDim(n), rng);
  for (auto _ : state) benchmark::DoNotOptimize(state_of_wigner(k, wigner_of_state(k, rho)));
}
BENCHMARK(BM_WignerRoundTrip)->DenseRange(2, 8, 2)->Arg(16);

void BM_ContinuumGrid(benchmark::State& state) {
  QuadratureConfig cfg;
  cfg.grid_points = static_cast<int>(state.range(0));
  const auto axis = grid_axis(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_grid({1.0, 0.5, 1.0}, axis, axis, cfg, 1));
}
BENCHMARK(BM_ContinuumGrid)->Arg(65)->Arg(129)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
