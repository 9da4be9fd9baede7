#include <benchmark/benchmark.h>

#include <complex>

#include "modrel/constants.hpp"
#include "modrel/quad.hpp"
#include "modrel/series.hpp"
#include "modrel/specfun.hpp"

using namespace modrel;

static void BM_DigammaReal(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::digamma(x));
    x += 1e-9;
  }
}
BENCHMARK(BM_DigammaReal);

static void BM_DigammaComplex(benchmark::State& state) {
  cplx z{0.37, 1.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::digamma(z));
    z += 1e-9;
  }
}
BENCHMARK(BM_DigammaComplex);

static void BM_ZetaCritical(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::zeta_critical(t));
  }
}
BENCHMARK(BM_ZetaCritical)->Arg(1)->Arg(10)->Arg(30)->Arg(60);

static void BM_XiWeight(benchmark::State& state) {
  const double t = 12.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::xi_weight(t));
  }
}
BENCHMARK(BM_XiWeight);

static void BM_SumPhi(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(series::sum_phi(1.0));
  }
}
BENCHMARK(BM_SumPhi);

static void BM_XiIntegral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::xi_integral(2.0));
  }
}
BENCHMARK(BM_XiIntegral);

static void BM_OscillatoryTransform(benchmark::State& state) {
  quad::OscillatorySpec spec;
  spec.envelope = [](double x) { return specfun::self_reciprocal(x); };
  spec.angular_frequency = 2.0 * Constants::pi;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::integrate_oscillatory_cos(spec, 1e-9));
  }
}
BENCHMARK(BM_OscillatoryTransform);

static void BM_DefectLimit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(series::defect_limit(2.0));
  }
}
BENCHMARK(BM_DefectLimit);

BENCHMARK_MAIN();
