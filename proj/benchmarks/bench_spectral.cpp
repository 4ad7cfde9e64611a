#include <benchmark/benchmark.h>

#include "singlab/bump.hpp"
#include "singlab/interval.hpp"
#include "singlab/measure.hpp"
#include "singlab/spectral.hpp"

using namespace singlab;

static void BM_FourierCoeffsPiecewise(benchmark::State& state) {
  long pieces = state.range(0);
  std::vector<Interval> arcs;
  double step = kTwoPi / static_cast<double>(pieces);
  for (long i = 0; i < pieces; ++i)
    arcs.emplace_back(step * static_cast<double>(i), step * 0.4);
  auto mu = CircleMeasure::uniform(IntervalUnion(arcs), 1.0);
  for (auto _ : state) {
    auto w = fourier_coeffs(mu, -256, 256);
    benchmark::DoNotOptimize(w.values().data());
  }
}
BENCHMARK(BM_FourierCoeffsPiecewise)->Arg(16)->Arg(128)->Arg(1024);

static void BM_BumpCoeffs(benchmark::State& state) {
  SmoothBump psi(1.0, 0.25, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto w = psi.coeffs(-2048, 2048);
    benchmark::DoNotOptimize(w.values().data());
  }
}
BENCHMARK(BM_BumpCoeffs)->Arg(4)->Arg(8);

static void BM_Pairing(benchmark::State& state) {
  long M = state.range(0);
  SmoothBump psi(2.0, 0.5, 6);
  auto mu = CircleMeasure::atomic({2.0}, {cx(1.0, 0.0)});
  auto w = fourier_coeffs(mu, -M, M);
  for (auto _ : state) {
    auto p = pair(w, psi, M);
    benchmark::DoNotOptimize(p.data());
  }
}
BENCHMARK(BM_Pairing)->Arg(512)->Arg(4096);

BENCHMARK_MAIN();
