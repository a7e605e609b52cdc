#include "kemeny/strategies.hpp"

#include <algorithm>
#include <array>

#include "kemeny/errors.hpp"
#include "kemeny/pruning.hpp"

namespace kemeny {
namespace {

constexpr double kScoreTolerance = 1e-12;

constexpr std::array<std::pair<StrategyKind, std::string_view>, 5> kNames{{
    {StrategyKind::uniform, "uniform"},
    {StrategyKind::opportunistic, "opportunistic"},
    {StrategyKind::optimistic, "optimistic"},
    {StrategyKind::pessimistic, "pessimistic"},
    {StrategyKind::bayesian, "bayesian"},
}};

void require_available(std::span<const Pair> available) {
  if (available.empty()) throw ExhaustedError("no pair is available for sampling");
}

double width(const IntervalMatrix& m, Pair p) { return m.upper(p.i, p.j) + m.upper(p.j, p.i); }

}  // namespace

std::string_view to_string(StrategyKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<StrategyKind> parse_strategy(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  if (name == "realistic") return StrategyKind::bayesian;
  return std::nullopt;
}

bool is_lookahead(StrategyKind kind) {
  return kind == StrategyKind::optimistic || kind == StrategyKind::pessimistic || kind == StrategyKind::bayesian;
}

IntervalMatrix rebuild_intervals(IntervalMatrix m, const BoundPolicy& policy) {
  m.refresh_offsets(policy.params);
  return policy.prune ? prune(std::move(m)) : m;
}

Pair select_uniform(const IntervalMatrix& m, std::span<const Pair> available) {
  require_available(available);
  Pair best = available.front();
  for (const Pair& p : available)
    if (m.pulls(p.i, p.j) < m.pulls(best.i, best.j)) best = p;
  return best;
}

Pair select_opportunistic(const IntervalMatrix& m, std::span<const Pair> available) {
  require_available(available);
  Pair best = available.front();
  double best_width = width(m, best);
  for (const Pair& p : available) {
    const double w = width(m, p);
    if (w > best_width + kScoreTolerance) {
      best = p;
      best_width = w;
    }
  }
  return best;
}

double LookaheadScore::optimistic() const { return std::min(first_wins, second_wins); }
double LookaheadScore::pessimistic() const { return std::max(first_wins, second_wins); }
double LookaheadScore::bayesian() const {
  // Skip a zero-weight branch so an impossible outcome cannot contribute.
  if (weight >= 1.0) return first_wins;
  if (weight <= 0.0) return second_wins;
  return weight * first_wins + (1.0 - weight) * second_wins;
}

double LookaheadScore::score(StrategyKind kind) const {
  switch (kind) {
    case StrategyKind::optimistic:
      return optimistic();
    case StrategyKind::pessimistic:
      return pessimistic();
    case StrategyKind::bayesian:
      return bayesian();
    default:
      throw InvalidInput("not a look-ahead strategy");
  }
}

LookaheadScore lookahead_score(const IntervalMatrix& m, Pair pair, const BoundPolicy& policy) {
  auto branch = [&](bool first_wins) {
    IntervalMatrix hypothetical = m;
    hypothetical.record(pair, first_wins);
    return approximation_bound(rebuild_intervals(std::move(hypothetical), policy));
  };
  const double weight = m.pulls(pair.i, pair.j) == 0 ? 0.5 : std::clamp(m.mean(pair.i, pair.j), 0.0, 1.0);
  return {pair, branch(true), branch(false), weight};
}

Pair select_lookahead(const IntervalMatrix& m, std::span<const Pair> available, StrategyKind kind,
                      const BoundPolicy& policy) {
  if (!is_lookahead(kind)) throw InvalidInput("select_lookahead needs a look-ahead strategy");
  require_available(available);
  Pair best = available.front();
  double best_score = lookahead_score(m, best, policy).score(kind);
  for (const Pair& p : available.subspan(1)) {
    const double s = lookahead_score(m, p, policy).score(kind);
    if (s < best_score - kScoreTolerance) {
      best = p;
      best_score = s;
    }
  }
  return best;
}

Pair select_pair(StrategyKind kind, const IntervalMatrix& m, std::span<const Pair> available,
                 const BoundPolicy& policy) {
  switch (kind) {
    case StrategyKind::uniform:
      return select_uniform(m, available);
    case StrategyKind::opportunistic:
      return select_opportunistic(m, available);
    default:
      return select_lookahead(m, available, kind, policy);
  }
}

}  // namespace kemeny
