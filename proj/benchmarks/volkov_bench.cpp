#include <benchmark/benchmark.h>

#include "volkov/clifford.hpp"
#include "volkov/identities.hpp"
#include "volkov/oscillatory.hpp"
#include "volkov/plane_wave.hpp"
#include "volkov/volkov.hpp"

namespace {

using namespace volkov;

void BM_MatrixProduct(benchmark::State& state) {
  const SpinMatrix a = slash(FourVector{1.3, 0.2, -0.7, 0.5});
  const SpinMatrix b = slash(FourVector{0.4, -1.1, 0.6, 0.9});
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatrixProduct);

void BM_PhaseIntegral(benchmark::State& state) {
  const auto field = PlaneWaveField::linear_sin2(1.0, 1.0, 4.0);
  const auto p = OnShellMomentum::from_lightcone(1.0, {0.3, -0.2}, 1.0);
  double eta = 0.0;
  for (auto _ : state) {
    eta += 1e-3;
    if (eta > field.support_end()) eta = 0.0;
    benchmark::DoNotOptimize(field.phase_integral(eta, p, Branch::particle));
  }
}
BENCHMARK(BM_PhaseIntegral);

void BM_VolkovEvaluate(benchmark::State& state) {
  const auto field = PlaneWaveField::linear_sin2(1.0, 1.0, 4.0);
  const auto p = OnShellMomentum::from_lightcone(1.0, {0.3, -0.2}, 1.0);
  const VolkovState psi(p, Spin::s1, Branch::particle, field);
  SpacetimePoint pt{0.3, 0.1, -0.2, -5.0};
  for (auto _ : state) {
    pt.z += 1e-3;
    if (pt.z > 1.0) pt.z = -5.0;
    benchmark::DoNotOptimize(psi.evaluate(pt));
  }
}
BENCHMARK(BM_VolkovEvaluate);

void BM_SmearedI0(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(smeared_I0(1.0, 0.05));
}
BENCHMARK(BM_SmearedI0);

void BM_KernelProduct(benchmark::State& state) {
  const Vec2 perp{0.3, -0.2}, a{0.4, 0.1}, ap{-0.2, 0.6};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        volkov_kernel_product(Branch::particle, perp, 1.2, 1.0, a, ap, -1.0));
}
BENCHMARK(BM_KernelProduct);

}  // namespace

BENCHMARK_MAIN();
