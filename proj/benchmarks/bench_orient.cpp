#include <benchmark/benchmark.h>

#include "orient/orient.hpp"

namespace {

using namespace orient;

void BM_BuildO33(benchmark::State& state) {
  const SettingTriple s = optimal_settings();
  for (auto _ : state) benchmark::DoNotOptimize(build_o33(s));
}
BENCHMARK(BM_BuildO33);

void BM_HermitianEigen(benchmark::State& state) {
  const CMatrix o = build_o33(SettingTriple::from_degrees(0, 37, -81));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(o));
}
BENCHMARK(BM_HermitianEigen);

void BM_ClosedFormTwoParam(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(closed_form_two_param(Angle::from_degrees(37), Angle::from_degrees(-81)));
}
BENCHMARK(BM_ClosedFormTwoParam);

void BM_EigsSweep(benchmark::State& state) {
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_surface(Family::TwoParam, grid, std::nullopt, {.threads = 1}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid * grid));
}
BENCHMARK(BM_EigsSweep)->Arg(31)->Arg(91)->Unit(benchmark::kMillisecond);

void BM_RunGame(benchmark::State& state) {
  const QuantumState phi = bell_state_density(BellLabel::PhiPlus);
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_game(phi, optimal_settings(), trials, seed++, {.threads = 1}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunGame)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_SynthCounts(benchmark::State& state) {
  const QuantumState noisy = noisy_phi_plus(0.97);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(synth_counts(noisy, optimal_settings(), 100'000, seed++));
}
BENCHMARK(BM_SynthCounts);

}  // namespace
BENCHMARK_MAIN();
