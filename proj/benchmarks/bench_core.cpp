#include <benchmark/benchmark.h>

#include <numeric>

#include "lensfill/cfrac.hpp"
#include "lensfill/fillings.hpp"
#include "lensfill/homology.hpp"
#include "lensfill/int_matrix.hpp"
#include "lensfill/lattice.hpp"

using namespace lensfill;

namespace {

void BM_HjExpandFibonacci(benchmark::State& state) {
  Integer a = 1, b = 1;
  for (int64_t i = 0; i < state.range(0); ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  for (auto _ : state) benchmark::DoNotOptimize(hj_expand(b, a));
}
BENCHMARK(BM_HjExpandFibonacci)->Arg(50)->Arg(200)->Arg(1000);

void BM_EnumerateZeroCF(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_zero_cf(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateZeroCF)->DenseRange(6, 10, 2);

// zset over every coprime pair up to p_max
void BM_ZsetSweep(benchmark::State& state) {
  const long pmax = state.range(0);
  for (auto _ : state) {
    std::size_t total = 0;
    for (long p = 2; p <= pmax; ++p)
      for (long q = 1; q < p; ++q)
        if (std::gcd(p, q) == 1) total += zset(make_params(p, q)).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ZsetSweep)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SpinGamma(benchmark::State& state) {
  const LensParams lp = make_params(state.range(0), 7);
  for (auto _ : state) {
    for (const SpinStructure& s : spin_structures(lp.b))
      benchmark::DoNotOptimize(gamma_standard(lp.b, s));
  }
}
BENCHMARK(BM_SpinGamma)->Arg(100)->Arg(1000);

void BM_StringCensus(benchmark::State& state) {
  const LensParams lp = make_params(state.range(0), state.range(1));
  const std::vector<CFTuple> z = zset(lp);
  for (auto _ : state) {
    for (const CFTuple& n : z) {
      const StringConfiguration cfg = build_string(lp.b, n);
      benchmark::DoNotOptimize(minimal_si_counts(cfg));
    }
  }
}
BENCHMARK(BM_StringCensus)->Args({49, 18})->Args({64, 15})->Unit(benchmark::kMillisecond);

void BM_SmithDiagonal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>((i * 7 + j * 13 + i * j) % 19) - 9;
  for (auto _ : state) benchmark::DoNotOptimize(smith_diagonal(m));
}
BENCHMARK(BM_SmithDiagonal)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
