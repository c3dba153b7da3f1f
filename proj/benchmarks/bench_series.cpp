#include <benchmark/benchmark.h>

#include <random>

#include "supercong/modular_series.hpp"
#include "supercong/series.hpp"

using namespace supercong;

namespace {

std::vector<BigInt> random_digits(std::size_t n, int digits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BigInt> v(n);
  for (auto& x : v) {
    x = 0;
    for (int i = 0; i < digits; ++i) x = x * 10 + static_cast<long>(rng() % 10);
    if (rng() & 1) x = -x;
  }
  return v;
}

void BM_Schoolbook(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_digits(n, 40, 1), b = random_digits(n, 40, 2);
  for (auto _ : state) benchmark::DoNotOptimize(detail::convolve_schoolbook(a, b, n));
}
BENCHMARK(BM_Schoolbook)->RangeMultiplier(4)->Range(16, 1024);

void BM_Kronecker(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_digits(n, 40, 1), b = random_digits(n, 40, 2);
  for (auto _ : state) benchmark::DoNotOptimize(detail::convolve_kronecker(a, b, n));
}
BENCHMARK(BM_Kronecker)->RangeMultiplier(4)->Range(16, 1024);

void BM_HPowerP(benchmark::State& state) {
  const auto p = state.range(0);
  const auto H = gen_H(3 * p + 1);
  for (auto _ : state) benchmark::DoNotOptimize(pow_int(H, p));
}
BENCHMARK(BM_HPowerP)->Arg(5)->Arg(101)->Arg(499);

void BM_GenC(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gen_C(state.range(0)));
}
BENCHMARK(BM_GenC)->Arg(500)->Arg(1500);

}  // namespace

BENCHMARK_MAIN();
