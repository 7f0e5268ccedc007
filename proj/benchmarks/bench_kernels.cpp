#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gsqg/contour.hpp"
#include "gsqg/estimates.hpp"
#include "gsqg/fft.hpp"
#include "gsqg/product.hpp"
#include "gsqg/projection.hpp"
#include "gsqg/random_field.hpp"
#include "gsqg/solver.hpp"

namespace {

using namespace gsqg;

SpectralField field(int n, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  return random_field({n, static_cast<double>(dealias_cutoff(n)), 0.0, 1, 1.0, true}, rng);
}

void BM_ForwardReal2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> grid = field(n).to_grid();
  std::vector<cplx> out(grid.size());
  for (auto _ : state) {
    fft::forward_real_2d(n, n, grid, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ForwardReal2d)->RangeMultiplier(2)->Range(32, 512);

void BM_DealiasProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpectralField f = field(n, 1), g = field(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dealias_product(f, g));
}
BENCHMARK(BM_DealiasProduct)->RangeMultiplier(2)->Range(32, 256);

void BM_IntegratorStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Integrator integ(ModelParams{}, n, std::nullopt, 1e-3);
  SpectralField theta = integ.project(field(n));
  for (auto _ : state) {
    theta = integ.step(theta);
    benchmark::DoNotOptimize(theta);
  }
}
BENCHMARK(BM_IntegratorStep)->RangeMultiplier(2)->Range(32, 256);

void BM_CdeVelocity(benchmark::State& state) {
  const Contour c = Contour::ellipse(static_cast<int>(state.range(0)), 1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(cde_velocity(c));
}
BENCHMARK(BM_CdeVelocity)->RangeMultiplier(2)->Range(64, 1024);

void BM_LambdaField(benchmark::State& state) {
  const Contour c = Contour::ellipse(static_cast<int>(state.range(0)), 1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_field(c));
}
BENCHMARK(BM_LambdaField)->RangeMultiplier(2)->Range(64, 512);

void BM_ComlogTrial(benchmark::State& state) {
  TrialSpec spec;
  spec.n = static_cast<int>(state.range(0));
  const TrialFields t = trial_fields(spec, 0);
  for (auto _ : state) benchmark::DoNotOptimize(comlog_trial(t.f, t.g, 1.0, 0.5, 0.1));
}
BENCHMARK(BM_ComlogTrial)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
