#include <benchmark/benchmark.h>

#include <random>

#include "hindlab/hindlab.hpp"

namespace {

hindlab::WindowedSet noise(std::int64_t lo, std::int64_t hi, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  return hindlab::WindowedSet::from_predicate(lo, hi, [&](std::int64_t) { return coin(rng); });
}

void BM_DifferenceSet(benchmark::State& state) {
  const auto s = noise(0, state.range(0), 0.05, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hindlab::difference_set(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DifferenceSet)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_ReturnSet(benchmark::State& state) {
  auto members = noise(1, 2000, 0.5, 2).members();
  members.push_back(4);
  const hindlab::SpacingShift p(hindlab::WindowedSet::from_members(1, 2000, members));
  const auto u = hindlab::Word::parse("10001");
  const auto v = hindlab::Word::parse("1");
  const auto w = hindlab::return_window(p, u, v);
  for (auto _ : state) benchmark::DoNotOptimize(hindlab::return_set(p, u, v, w.lo, w.hi));
}
BENCHMARK(BM_ReturnSet);

void BM_NuvCheckAll(benchmark::State& state) {
  const hindlab::SpacingShift p(noise(1, 2000, 0.5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(hindlab::nuv_check_all(p, state.range(0)));
}
BENCHMARK(BM_NuvCheckAll)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SquaresDelta4(benchmark::State& state) {
  const auto sq = hindlab::squares_family(1, state.range(0), false);
  for (auto _ : state) benchmark::DoNotOptimize(hindlab::find_delta_subset(sq, 4, state.range(0)));
}
BENCHMARK(BM_SquaresDelta4)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_MinSubcover(benchmark::State& state) {
  const auto full = hindlab::SpacingShift::full(64);
  const auto cover = hindlab::ClopenCover::parse("00+01\n00+10\n11\n");
  std::vector<std::int64_t> times;
  for (std::int64_t i = 0; i < state.range(0); ++i) times.push_back(i);
  const auto joined = hindlab::refine_along(full, cover, times);
  for (auto _ : state) benchmark::DoNotOptimize(hindlab::min_subcover(full, joined, 64));
}
BENCHMARK(BM_MinSubcover)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
