#include <benchmark/benchmark.h>

#include "latpack/body.hpp"
#include "latpack/eutaxy.hpp"
#include "latpack/golay.hpp"
#include "latpack/harmonics.hpp"
#include "latpack/lattice.hpp"
#include "latpack/pessimum.hpp"

namespace {

using namespace latpack;

void BM_GolayBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_golay());
}
BENCHMARK(BM_GolayBuild);

void BM_EnumerateE8(benchmark::State& state) {
  Lattice e8 = root_e(8);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_vectors(e8));
}
BENCHMARK(BM_EnumerateE8);

void BM_EnumerateLeech(benchmark::State& state) {
  Lattice l = leech();
  for (auto _ : state) benchmark::DoNotOptimize(minimal_vectors(l));
}
BENCHMARK(BM_EnumerateLeech)->Unit(benchmark::kMillisecond);

void BM_LeechConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(leech());
}
BENCHMARK(BM_LeechConstruction)->Unit(benchmark::kMillisecond);

void BM_ClassifyD6(benchmark::State& state) {
  Lattice d6 = root_d(6);
  auto cfg = unit_configuration(d6, minimal_vectors(d6));
  ClassifyOptions opts;
  opts.check_redundancy = true;
  for (auto _ : state) benchmark::DoNotOptimize(classify(cfg, opts));
}
BENCHMARK(BM_ClassifyD6)->Unit(benchmark::kMillisecond);

void BM_EutaxyLpE8(benchmark::State& state) {
  Lattice e8 = root_e(8);
  auto cfg = unit_configuration(e8, minimal_vectors(e8));
  auto reduced = cfg.without_pair(0);
  for (auto _ : state) benchmark::DoNotOptimize(eutaxy_class(reduced));
}
BENCHMARK(BM_EutaxyLpE8)->Unit(benchmark::kMillisecond);

void BM_MultiplierTable(benchmark::State& state) {
  for (auto _ : state)
    for (int l = 0; l <= 200; l += 2) benchmark::DoNotOptimize(multiplier_c_exact(l));
}
BENCHMARK(BM_MultiplierTable);

void BM_PhiPoint(benchmark::State& state) {
  RadialBody body = random_body(1, 8, 0.01);
  SphPoint y = sph_point(0.3, 0.4, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(phi_point(body.rho, y));
}
BENCHMARK(BM_PhiPoint);

void BM_ConstructRadial(benchmark::State& state) {
  RadialBody body = random_body(1, 8, 0.01);
  MatD rot = random_rotation(5);
  for (auto _ : state) benchmark::DoNotOptimize(construct_radial(body, rot));
}
BENCHMARK(BM_ConstructRadial);

void BM_RotationSearch(benchmark::State& state) {
  RadialBody body = random_body(1, 6, 0.01);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        best_rotation(body, static_cast<std::size_t>(state.range(0)), 40, 2));
}
BENCHMARK(BM_RotationSearch)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_RemoveQuadratic(benchmark::State& state) {
  RadialBody base = random_body(3, 6, 0.004);
  EvenHarmonic rho = base.rho;
  rho.coeff(2, 0) = 0.003;
  RadialBody injected = make_radial_body(rho, 0.02);
  for (auto _ : state) benchmark::DoNotOptimize(remove_quadratic(injected));
}
BENCHMARK(BM_RemoveQuadratic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
