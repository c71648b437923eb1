#include <benchmark/benchmark.h>

#include "gammatype/catalog.hpp"
#include "gammatype/density.hpp"
#include "gammatype/sampler.hpp"
#include "gammatype/specfun.hpp"

using namespace gammatype;

static void BM_LogGammaComplex(benchmark::State& state) {
  Complex z(0.3, 12.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::log_gamma(z));
    z += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_LogGammaComplex);

static void BM_EvaluateRep(benchmark::State& state) {
  const auto rep = catalog::make_hashing_M().rep;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(rep, Complex(0.4, 3.0)));
}
BENCHMARK(BM_EvaluateRep);

static void BM_DensityMellin(benchmark::State& state) {
  const auto rep = catalog::make_brownian_sup_area().rep;
  for (auto _ : state) benchmark::DoNotOptimize(density::density_mellin(rep, 0.8));
}
BENCHMARK(BM_DensityMellin)->Unit(benchmark::kMicrosecond);

static void BM_DensitySeries(benchmark::State& state) {
  const auto rep = catalog::make_brownian_sup_area().rep;
  for (auto _ : state) benchmark::DoNotOptimize(density::density_series_from_left(rep, 0.8));
}
BENCHMARK(BM_DensitySeries)->Unit(benchmark::kMicrosecond);

static void BM_SampleBrownianArea(benchmark::State& state) {
  sampler::RngStream rng(1, 0);
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sampler::sample_brownian_sup_area(steps, rng));
}
BENCHMARK(BM_SampleBrownianArea)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
