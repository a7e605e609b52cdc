#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "kemeny/confidence.hpp"
#include "kemeny/interval_matrix.hpp"

namespace kemeny {

enum class StrategyKind { uniform, opportunistic, optimistic, pessimistic, bayesian };

std::string_view to_string(StrategyKind kind);
std::optional<StrategyKind> parse_strategy(std::string_view name);
bool is_lookahead(StrategyKind kind);

/// How intervals are rebuilt after a (real or hypothetical) sample.
struct BoundPolicy {
  PACParams params;
  bool prune = true;
};

/// Fresh offsets from the pull counts, then the pruning pipeline when enabled.
IntervalMatrix rebuild_intervals(IntervalMatrix m, const BoundPolicy& policy);

// Every selector scans `available` in the given order and keeps the first best
// candidate, so passing pairs in lexicographic order gives lexicographic tie-breaking.
// All throw ExhaustedError when `available` is empty.

/// Fewest pulls.
Pair select_uniform(const IntervalMatrix& m, std::span<const Pair> available);

/// Widest interval, upper(i,j) + upper(j,i).
Pair select_opportunistic(const IntervalMatrix& m, std::span<const Pair> available);

/// Total width after one hypothetical sample of each candidate, for both outcomes.
struct LookaheadScore {
  Pair pair;
  double first_wins;   ///< total width if pair.i wins
  double second_wins;  ///< total width if pair.j wins
  double weight;       ///< probability assigned to pair.i winning (mean clamped to [0, 1])

  double optimistic() const;
  double pessimistic() const;
  double bayesian() const;
  double score(StrategyKind kind) const;
};

LookaheadScore lookahead_score(const IntervalMatrix& m, Pair pair, const BoundPolicy& policy);

/// Pair with the smallest look-ahead score for kind in {optimistic, pessimistic, bayesian}.
Pair select_lookahead(const IntervalMatrix& m, std::span<const Pair> available, StrategyKind kind,
                      const BoundPolicy& policy);

/// Dispatch on kind.
Pair select_pair(StrategyKind kind, const IntervalMatrix& m, std::span<const Pair> available,
                 const BoundPolicy& policy);

}  // namespace kemeny
