#include <benchmark/benchmark.h>

#include "photsub/overlaps.hpp"
#include "photsub/sweeps.hpp"
#include "photsub/wigner.hpp"

namespace {

using namespace photsub;

const Scenario scenario{};
const double tau9 = scenario.jsa_for(9.0).tau_s();
const double omega0 = scenario.omega_signal();
double nm(double v) { return scenario.nm_to_omega(v); }

void BM_gamma_quadrature_gauss(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = build_basis(tau9, omega0, n, default_grid(omega0, tau9, n, {nm(1.0)}));
  const auto filter = FilterProfile::gaussian(omega0, nm(1.0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_quadrature(basis, filter));
}
BENCHMARK(BM_gamma_quadrature_gauss)->Arg(40)->Arg(120)->Arg(200);

void BM_gamma_rect_analytic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gamma_rectangular_analytic(tau9, n, nm(1.0)));
}
BENCHMARK(BM_gamma_rect_analytic)->Arg(40)->Arg(120)->Arg(200);

void BM_gamma_gaussian_analytic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gamma_gaussian_analytic(tau9, n, nm(1.0)));
}
BENCHMARK(BM_gamma_gaussian_analytic)->Arg(20)->Arg(40);

void BM_heralded_point(benchmark::State& state) {
  PointEvaluator eval(scenario, 9.0, FilterKind::Rectangular, 1.0, 1.5, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(eval.at_lo(2.1));
}
BENCHMARK(BM_heralded_point);

void BM_negativity_closed(benchmark::State& state) {
  PointEvaluator eval(scenario, 9.0, FilterKind::Rectangular, 1.0, 1.5, 3.0);
  const auto w = wigner_heralded(eval.params_at_lo(2.1));
  for (auto _ : state) benchmark::DoNotOptimize(negativity(w));
}
BENCHMARK(BM_negativity_closed);

void BM_negativity_grid(benchmark::State& state) {
  PointEvaluator eval(scenario, 9.0, FilterKind::Rectangular, 1.0, 1.5, 3.0);
  const auto w = wigner_heralded(eval.params_at_lo(2.1));
  const auto grid = sample_wigner(w, WignerGridSpec::for_state(w));
  for (auto _ : state) benchmark::DoNotOptimize(negativity(grid));
}
BENCHMARK(BM_negativity_grid);

}  // namespace

BENCHMARK_MAIN();
