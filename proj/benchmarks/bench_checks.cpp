#include <benchmark/benchmark.h>

#include "supercong/checks.hpp"
#include "supercong/recurrence.hpp"

using namespace supercong;

namespace {

void BM_ComputeDeltas(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_deltas(p));
}
BENCHMARK(BM_ComputeDeltas)->Arg(5)->Arg(101)->Arg(251)->Arg(499)->Unit(benchmark::kMillisecond);

void BM_Sequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(a_seq(state.range(0)));
}
BENCHMARK(BM_Sequence)->Arg(500)->Arg(2500);

void BM_Window(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_supercongruence_window(47, 499));
}
BENCHMARK(BM_Window)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
