#include <benchmark/benchmark.h>

#include "kemeny/confidence.hpp"
#include "kemeny/elicitation.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/oracles.hpp"
#include "kemeny/preferences.hpp"
#include "kemeny/pruning.hpp"
#include "kemeny/strategies.hpp"

using namespace kemeny;

namespace {

IntervalMatrix sampled_state(int k, std::int64_t n, std::uint64_t seed) {
  Rng rng(seed);
  VoterPool pool(gen_uniform_profile(k, n, rng), seed);
  IntervalMatrix m(k);
  for (const auto p : all_pairs(k)) {
    const auto t = uniform_below(rng, static_cast<std::uint64_t>(n));
    for (std::uint64_t d = 0; d < t; ++d) m.record(p, pool.draw(p.i, p.j));
  }
  m.refresh_offsets(PACParams::make(k, 0.1 * static_cast<double>(pair_count(k)), 0.05, n));
  return m;
}

void BM_SolveKemenyExact(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng(1);
  const auto q = profile_to_matrix(gen_uniform_profile(k, 25, rng));
  for (auto _ : state) benchmark::DoNotOptimize(solve_kemeny(q));
}
BENCHMARK(BM_SolveKemenyExact)->DenseRange(8, 16, 2)->Unit(benchmark::kMillisecond);

void BM_SolveKemenyReal(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng(2);
  const auto q = profile_to_matrix(gen_uniform_profile(k, 25, rng));
  for (auto _ : state) benchmark::DoNotOptimize(solve_kemeny(q.entries(), Ranking::identity(k)));
}
BENCHMARK(BM_SolveKemenyReal)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng(3);
  const auto q = profile_to_matrix(gen_uniform_profile(k, 25, rng));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_kemeny(q, Ranking::identity(k)));
}
BENCHMARK(BM_BruteForce)->DenseRange(6, 8, 1)->Unit(benchmark::kMillisecond);

void BM_PruneFixpoint(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto m = sampled_state(k, 30, 4);
  for (auto _ : state) benchmark::DoNotOptimize(prune(m));
}
BENCHMARK(BM_PruneFixpoint)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMicrosecond);

void BM_LookaheadSelect(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const std::int64_t n = 30;
  const auto m = sampled_state(k, n, 5);
  const BoundPolicy policy{PACParams::make(k, 0.1 * static_cast<double>(pair_count(k)), 0.05, n), true};
  const auto pairs = all_pairs(k);
  for (auto _ : state) benchmark::DoNotOptimize(select_lookahead(m, pairs, StrategyKind::bayesian, policy));
}
BENCHMARK(BM_LookaheadSelect)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_AdaptiveRun(benchmark::State& state) {
  const auto kind = static_cast<StrategyKind>(state.range(0));
  Rng rng(6);
  const auto profile = gen_uniform_profile(6, 10, rng);
  const auto params = PACParams::make(6, 1.5, 0.05, 10);
  for (auto _ : state) {
    VoterPool pool(profile, 7);
    benchmark::DoNotOptimize(adaptive_elicit(pool, params, {kind, true, default_budget(params), 1, {}}));
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_AdaptiveRun)->DenseRange(0, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
