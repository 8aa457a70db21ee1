#include <benchmark/benchmark.h>

#include "dreidel/chain/solve.hpp"
#include "dreidel/chain/system.hpp"
#include "dreidel/games/simulate.hpp"
#include "dreidel/keyeq/keyeq.hpp"

namespace {

using namespace dreidel;

void BM_ExactSimplified(benchmark::State& state) {
  const auto sys = build_system(Game::kSimplified, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(sys.system));
  state.counters["states"] = static_cast<double>(sys.states.size());
}
BENCHMARK(BM_ExactSimplified)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ExactFull(benchmark::State& state) {
  const auto sys = build_system(Game::kFull, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(sys.system));
  state.counters["states"] = static_cast<double>(sys.states.size());
}
BENCHMARK(BM_ExactFull)->Arg(10)->Arg(15)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_HiprecRefinement(benchmark::State& state) {
  const auto sys = build_system(Game::kFull, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_hiprec(sys.system));
  state.counters["states"] = static_cast<double>(sys.states.size());
}
BENCHMARK(BM_HiprecRefinement)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_HiprecGaussSeidel(benchmark::State& state) {
  const auto sys = build_system(Game::kSimplified, static_cast<int>(state.range(0)));
  HiprecOptions options;
  options.method = HiprecMethod::kGaussSeidel;
  for (auto _ : state) benchmark::DoNotOptimize(solve_hiprec(sys.system, options));
}
BENCHMARK(BM_HiprecGaussSeidel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ReducedLineSolve(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_solve_T(m));
}
BENCHMARK(BM_ReducedLineSolve)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_SimulateSimplified(benchmark::State& state) {
  SimOptions options;
  options.trials = static_cast<std::uint64_t>(state.range(0));
  options.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(Game::kSimplified, {2, 2, 2}, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateSimplified)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
