#include <benchmark/benchmark.h>

#include <random>

#include "halfcomm/fusion.hpp"
#include "halfcomm/groups.hpp"
#include "halfcomm/haar.hpp"
#include "halfcomm/words.hpp"

using namespace halfcomm;

static void BM_NormalForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> idx(1, 4);
  Word w(static_cast<std::size_t>(state.range(0)));
  for (auto& l : w) l = Letter{idx(rng), idx(rng), false};
  for (auto _ : state) benchmark::DoNotOptimize(hc_normal_form(w));
}
BENCHMARK(BM_NormalForm)->Arg(8)->Arg(64)->Arg(512);

static void BM_WeingartenTable(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  int n = 10;
  for (auto _ : state) benchmark::DoNotOptimize(weingarten_table(p, n++));
}
BENCHMARK(BM_WeingartenTable)->Arg(3)->Arg(4)->Iterations(20);

static void BM_NormEqual(benchmark::State& state) {
  const int n = 3;
  const auto g = [](int i, int j) { return CrossedElement::generator(n, i, j); };
  const CrossedElement x = g(1, 1) * g(2, 2) * g(1, 2);
  const CrossedElement y = g(2, 2) * g(1, 1) * g(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(norm_equal(x, y));
}
BENCHMARK(BM_NormEqual);

static void BM_LittlewoodRichardson(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lr_partitions({3, 2, 1}, {3, 2, 1, 1}, n));
}
BENCHMARK(BM_LittlewoodRichardson)->Arg(3)->Arg(5);

static void BM_HaarSample(benchmark::State& state) {
  HaarSampler sampler({GroupKind::Un, static_cast<int>(state.range(0))}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sampler());
}
BENCHMARK(BM_HaarSample)->Arg(2)->Arg(4)->Arg(8);

static void BM_MonteCarlo(benchmark::State& state) {
  const FunElement f = FunElement::u(2, 1, 1) * FunElement::ubar(2, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mc_integral(f, {GroupKind::Un, 2}, 20000, 5));
}
BENCHMARK(BM_MonteCarlo);
BENCHMARK_MAIN();
