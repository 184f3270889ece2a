#include <benchmark/benchmark.h>

#include "fdzeros/debruijn.hpp"
#include "fdzeros/harness.hpp"
#include "fdzeros/random.hpp"
#include "fdzeros/rootfind.hpp"
#include "fdzeros/walsh.hpp"

namespace {

using namespace fdzeros;

Polynomial sample(int degree, std::uint64_t seed) {
  Rng rng(seed);
  return random_hyperbolic(degree, -5.0, 5.0, rng);
}

void BM_Roots(benchmark::State& state) {
  const Polynomial p = sample(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(BM_Roots)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_ApplyTb(benchmark::State& state) {
  const Polynomial p = sample(static_cast<int>(state.range(0)), 2);
  const DeBruijnOp op(0.9, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(apply_tb(op, p));
}
BENCHMARK(BM_ApplyTb)->Arg(4)->Arg(16)->Arg(40);

void BM_WalshConvolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Polynomial p = sample(n, 3), q = sample(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(walsh_convolve(p, q, n));
}
BENCHMARK(BM_WalshConvolve)->Arg(4)->Arg(16)->Arg(40);

void BM_Suite(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
}
BENCHMARK(BM_Suite)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
