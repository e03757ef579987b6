#include <benchmark/benchmark.h>

#include <complex>

#include "fracspec/fracspec.hpp"

using namespace fracspec;

static void BM_LogGammaComplex(benchmark::State& state) {
  std::complex<double> z{0.3, 7.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::log_gamma(z));
    z += std::complex<double>{1e-9, 0.0};
  }
}
BENCHMARK(BM_LogGammaComplex);

static void BM_PsiShiftSeries(benchmark::State& state) {
  const std::complex<double> z{2.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(specfun::psi_shift_series(z, 0.9));
}
BENCHMARK(BM_PsiShiftSeries);

static void BM_ThetaRealB(benchmark::State& state) {
  const SpectralParams p(6, 1, 0.9);
  const double a0 = a_m(0, p);
  for (auto _ : state) benchmark::DoNotOptimize(theta({a0, SymbolB::real(3.0)}, p));
}
BENCHMARK(BM_ThetaRealB);

static void BM_ThetaImaginaryB(benchmark::State& state) {
  const SpectralParams p(6, 1, 0.9);
  const double a0 = a_m(0, p);
  for (auto _ : state) benchmark::DoNotOptimize(theta({a0, SymbolB::imaginary(0.3)}, p));
}
BENCHMARK(BM_ThetaImaginaryB);

static void BM_SolveCn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(thresholds::solve_cn(n));
}
BENCHMARK(BM_SolveCn)->Arg(4)->Arg(8)->Arg(40);

static void BM_DetectInstants(benchmark::State& state) {
  const SpectralParams p(4, 1, 0.5);
  const SurfaceSpectrum base({0.0, 1.0, 1.1, 1.2, 1.3, 1.4, 3.0});
  const auto path = pinching_family(static_cast<int>(state.range(0)), 0.45, base);
  DetectOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(detect_instants(path, p, options));
}
BENCHMARK(BM_DetectInstants)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
