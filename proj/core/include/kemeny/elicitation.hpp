#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kemeny/confidence.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/oracles.hpp"
#include "kemeny/strategies.hpp"

namespace kemeny {

enum class Termination { bound_met, budget, exhausted };
std::string_view to_string(Termination t);

struct TraceStep {
  std::int64_t step;  ///< 1-based
  Pair pair;
  bool first_wins;  ///< pair.i won the comparison
  std::uint64_t pulls_hash;
  std::optional<double> bound;     ///< certified bound W after this sample
  std::optional<double> true_gap;  ///< K(Q, current ranking) - K*(Q), on certification steps
  std::int64_t pulls_total;
};

struct ElicitationTrace {
  std::vector<TraceStep> steps;
  std::int64_t total_samples = 0;
  Termination terminated_by = Termination::bound_met;
  double final_bound = 0.0;
  double final_true_gap = 0.0;
  double optimal_score = 0.0;  ///< K*(Q) of the hidden truth
};

struct ElicitationResult {
  KemenyResult result;  ///< ranking and its score on the optimistic matrix it was solved on
  ElicitationTrace trace;
};

/// Fixed-size uniform sampling with replacement, then the Kemeny ranking of
/// the estimate shifted up by the Hoeffding offset.
ElicitationResult kemeny_el_with_replacement(BernoulliOracle& oracle, const PACParams& params);

/// Fixed-size uniform sampling without replacement (population taken from the pool).
ElicitationResult kemeny_el_without_replacement(VoterPool& pool, const PACParams& params);

struct AdaptiveOptions {
  StrategyKind strategy = StrategyKind::uniform;
  bool prune = true;
  std::int64_t budget = 1;
  int cert_every = 1;
  std::optional<Ranking> tiebreak;  ///< identity when empty
};

/// Certified termination test; absorbs summation noise in W.
inline constexpr double kBoundSlack = 1e-9;

/// One sample per step from the pair the strategy selects, intervals rebuilt
/// (and pruned) after every sample. Stops when the certified bound reaches rho,
/// the budget is spent, or every pair is exhausted. The ranking is solved on
/// mean + upper offset every cert_every steps and at termination.
ElicitationResult adaptive_elicit(BernoulliOracle& oracle, const PACParams& params, const AdaptiveOptions& options);
ElicitationResult adaptive_elicit(VoterPool& pool, const PACParams& params, const AdaptiveOptions& options);

/// Default budgets: 2x the theoretical total with replacement, n k(k-1)/2 without.
std::int64_t default_budget(const PACParams& params);
/// 1 for k <= 6, else 10.
int default_cert_every(int k);

}  // namespace kemeny
