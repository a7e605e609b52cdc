#include <algorithm>

#include "doctest.h"
#include "kemeny/confidence.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/pruning.hpp"
#include "kemeny/strategies.hpp"
#include "test_util.hpp"

using namespace kemeny;

namespace {

constexpr StrategyKind kAll[] = {StrategyKind::uniform, StrategyKind::opportunistic, StrategyKind::optimistic,
                                 StrategyKind::pessimistic, StrategyKind::bayesian};
constexpr StrategyKind kLookahead[] = {StrategyKind::optimistic, StrategyKind::pessimistic, StrategyKind::bayesian};

IntervalMatrix worked_example_pruned() {
  SquareMatrix means(3, 0.5), upper(3, 0.0), lower(3, 0.0);
  const double q[3][3] = {{0.5, 0.9, 0.6}, {0.1, 0.5, 0.9}, {0.4, 0.1, 0.5}};
  const double lo[3][3] = {{0.0, 0.2, 0.2}, {0.1, 0.0, 0.2}, {0.2, 0.1, 0.0}};
  const double up[3][3] = {{0.0, 0.25, 0.2}, {0.15, 0.0, 0.25}, {0.2, 0.15, 0.0}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      means(i, j) = q[i][j];
      lower(i, j) = lo[i][j];
      upper(i, j) = up[i][j];
    }
  }
  return prune(IntervalMatrix::from_estimates(means, upper, lower));
}

// Random sampled state under the real update pipeline.
IntervalMatrix random_state(int k, const BoundPolicy& policy, Rng& rng) {
  IntervalMatrix m(k);
  for (const auto p : all_pairs(k)) {
    const auto t = uniform_below(rng, 30);
    const double bias = uniform01(rng);
    for (std::uint64_t d = 0; d < t; ++d) m.record(p, uniform01(rng) < bias);
  }
  return rebuild_intervals(m, policy);
}

}  // namespace

TEST_CASE("strategy names") {
  for (const auto kind : kAll) CHECK(parse_strategy(to_string(kind)) == kind);
  CHECK(parse_strategy("realistic") == StrategyKind::bayesian);
  CHECK_FALSE(parse_strategy("greedy").has_value());
  CHECK_FALSE(is_lookahead(StrategyKind::uniform));
  CHECK_FALSE(is_lookahead(StrategyKind::opportunistic));
  for (const auto kind : kLookahead) CHECK(is_lookahead(kind));
}

TEST_CASE("uniform selection") {
  const auto pairs = all_pairs(3);
  IntervalMatrix m(3);
  CHECK(select_uniform(m, pairs) == Pair{0, 1});
  m.record({0, 1}, true);
  m.record({0, 1}, false);
  m.record({0, 2}, true);
  m.record({1, 2}, true);
  CHECK(select_uniform(m, pairs) == Pair{0, 2});
  const Pair only[] = {{1, 2}};
  CHECK(select_uniform(m, only) == Pair{1, 2});
  CHECK_THROWS_AS(select_uniform(m, std::span<const Pair>{}), ExhaustedError);
}

TEST_CASE("opportunistic selection") {
  const auto pairs = all_pairs(3);
  CHECK(select_opportunistic(worked_example_pruned(), pairs) == Pair{0, 2});
  IntervalMatrix even(4);
  even.set_uniform_offset(0.2);
  CHECK(select_opportunistic(even, all_pairs(4)) == Pair{0, 1});
  even.set_upper(0, 1, 0.0);
  even.set_upper(1, 0, 0.0);
  CHECK(select_opportunistic(even, all_pairs(4)) == Pair{0, 2});
  CHECK_THROWS_AS(select_opportunistic(even, std::span<const Pair>{}), ExhaustedError);
}

TEST_CASE("all strategies collapse when pulls are equal and pruning is inert") {
  const int k = 4;
  const BoundPolicy policy{PACParams::make(k, 0.6, 0.05), true};
  IntervalMatrix m(k);
  for (const auto p : all_pairs(k)) {
    for (int d = 0; d < 500; ++d) m.record(p, d % 2 == 0);
  }
  m = rebuild_intervals(m, policy);
  const BoundPolicy raw{policy.params, false};
  // Inert: pruning changes nothing now or after any single extra sample.
  CHECK(rebuild_intervals(m, policy) == rebuild_intervals(m, raw));
  for (const auto p : all_pairs(k)) {
    for (const bool outcome : {true, false}) {
      auto next = m;
      next.record(p, outcome);
      CHECK(rebuild_intervals(next, policy) == rebuild_intervals(next, raw));
    }
  }
  const auto pairs = all_pairs(k);
  for (const auto kind : kAll) CHECK(select_pair(kind, m, pairs, policy) == select_uniform(m, pairs));
}

TEST_CASE("look-ahead score ordering and degenerate weights") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 3 + static_cast<int>(uniform_below(rng, 3));
    const bool without = trial % 2 == 0;
    const BoundPolicy policy{PACParams::make(k, 0.5, 0.05, without ? std::optional<std::int64_t>(40) : std::nullopt),
                             trial % 3 != 0};
    const auto m = random_state(k, policy, rng);
    for (const auto p : all_pairs(k)) {
      const auto s = lookahead_score(m, p, policy);
      CHECK(s.optimistic() <= s.bayesian() + 1e-12);
      CHECK(s.bayesian() <= s.pessimistic() + 1e-12);
      CHECK(s.weight >= 0.0);
      CHECK(s.weight <= 1.0);
      CHECK(s.score(StrategyKind::optimistic) == s.optimistic());
    }
  }

  const int k = 3;
  const BoundPolicy policy{PACParams::make(k, 0.5, 0.05), true};
  IntervalMatrix m(k);
  for (const auto p : all_pairs(k)) {
    for (int d = 0; d < 10; ++d) m.record(p, true);
  }
  m = rebuild_intervals(m, policy);
  const auto s = lookahead_score(m, {0, 1}, policy);
  CHECK(s.weight == 1.0);
  CHECK(s.bayesian() == s.first_wins);

  const auto fresh = lookahead_score(IntervalMatrix(k), {0, 2}, policy);
  CHECK(fresh.weight == 0.5);
}

TEST_CASE("look-ahead respects availability and is deterministic") {
  Rng rng(6);
  const int k = 5;
  const BoundPolicy policy{PACParams::make(k, 1.0, 0.05, 40), true};
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_state(k, policy, rng);
    auto pairs = all_pairs(k);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, pairs.size())));
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, pairs.size())));
    for (const auto kind : kLookahead) {
      const auto chosen = select_lookahead(m, pairs, kind, policy);
      CHECK(std::find(pairs.begin(), pairs.end(), chosen) != pairs.end());
      CHECK(select_lookahead(m, pairs, kind, policy) == chosen);
      // The choice minimises the score; ties go to the earliest pair.
      const double best = lookahead_score(m, chosen, policy).score(kind);
      for (const auto p : pairs) {
        const double other = lookahead_score(m, p, policy).score(kind);
        CHECK(best <= other + 1e-12);
        if (p < chosen) CHECK(other > best + 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(select_lookahead(IntervalMatrix(3), {}, StrategyKind::bayesian, policy), ExhaustedError);
}
