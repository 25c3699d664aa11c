#include <benchmark/benchmark.h>

#include "bsig/detection.hpp"
#include "bsig/oracle.hpp"
#include "bsig/presets.hpp"
#include "bsig/robustness.hpp"
#include "bsig/stackelberg.hpp"

namespace {

using namespace bsig;

void BM_QFunction(benchmark::State& state) {
  double x = -8.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_function(x));
    x = x > 8.0 ? -8.0 : x + 0.001;
  }
}
BENCHMARK(BM_QFunction);

void BM_LrtBestResponse(benchmark::State& state) {
  const GameConfig g = figure1_config();
  const SignalPair s{-0.3, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(lrt_best_response(g.receiver, s, g.sigma));
}
BENCHMARK(BM_LrtBestResponse);

void BM_SolveStackelberg(benchmark::State& state) {
  const GameConfig g = figure1_config();
  for (auto _ : state) benchmark::DoNotOptimize(solve_stackelberg(g));
}
BENCHMARK(BM_SolveStackelberg);

void BM_GridReceiverBestResponse(benchmark::State& state) {
  const GameConfig g = figure1_config();
  GridSpec grid;
  grid.threshold_points = static_cast<int>(state.range(0));
  const SignalPair s{-0.3, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(grid_receiver_best_response(s, g, grid));
}
BENCHMARK(BM_GridReceiverBestResponse)->Arg(51)->Arg(201);

void BM_VerifyStackelberg(benchmark::State& state) {
  const GameConfig g = figure1_config();
  GridSpec grid;
  grid.signal_points = static_cast<int>(state.range(0));
  const SignalPair s = solve_stackelberg(g).signals;
  for (auto _ : state) benchmark::DoNotOptimize(verify_stackelberg(g, s, grid));
}
BENCHMARK(BM_VerifyStackelberg)->Arg(51)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveNashSearch(benchmark::State& state) {
  const GameConfig g = biased_cost_config({0.5, 0.3, 1.0, 1.0, 1.0});
  const GridSpec grid{static_cast<int>(state.range(0)), 101, 6.0, 1e-6};
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_nash_search(g, grid));
}
BENCHMARK(BM_ExhaustiveNashSearch)->Arg(21)->Arg(51)->Unit(benchmark::kMillisecond);

void BM_NashRobustnessCheck(benchmark::State& state) {
  const GameConfig g = figure1_team_config();
  for (auto _ : state) benchmark::DoNotOptimize(nash_robustness_check(g, 0.2, 1000, 1));
}
BENCHMARK(BM_NashRobustnessCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
