#include "kemeny/elicitation.hpp"

#include "kemeny/errors.hpp"

namespace kemeny {
namespace {

PACParams with_replacement_params(PACParams params, int arms) {
  if (params.k != arms) throw InvalidInput("PAC parameters and oracle disagree on k");
  params.population.reset();
  return params;
}

PACParams without_replacement_params(PACParams params, const VoterPool& pool) {
  if (params.k != pool.arms()) throw InvalidInput("PAC parameters and voter pool disagree on k");
  if (params.population && *params.population != pool.population()) {
    throw InvalidInput("PAC parameters and voter pool disagree on n");
  }
  params.population = pool.population();
  return params;
}

template <typename Source>
ElicitationResult fixed_sample_run(Source& source, const PACParams& params, std::int64_t per_pair, double offset) {
  const int k = params.k;
  IntervalMatrix state(k);
  ElicitationTrace trace;
  std::int64_t step = 0;
  for (const Pair& p : all_pairs(k)) {
    for (std::int64_t s = 0; s < per_pair; ++s) {
      const bool first_wins = source.draw(p.i, p.j);
      state.record(p, first_wins);
      trace.steps.push_back({++step, p, first_wins, 0, std::nullopt, std::nullopt, state.total_pulls()});
    }
  }
  state.set_uniform_offset(offset);

  const Ranking tiebreak = Ranking::identity(k);
  KemenyResult result = solve_kemeny(state.optimistic_matrix(), tiebreak);
  const auto& truth = source.truth();
  trace.optimal_score = solve_kemeny(truth, tiebreak).score;
  trace.total_samples = step;
  trace.final_bound = approximation_bound(state);
  trace.final_true_gap = kemeny_score(truth, result.ranking) - trace.optimal_score;
  trace.terminated_by = Termination::bound_met;
  if (!trace.steps.empty()) {
    auto& last = trace.steps.back();
    last.pulls_hash = state.pulls_hash();
    last.bound = trace.final_bound;
    last.true_gap = trace.final_true_gap;
  }
  return {std::move(result), std::move(trace)};
}

bool can_draw(const BernoulliOracle&, Pair) { return true; }
bool can_draw(const VoterPool& pool, Pair p) { return pool.remaining(p.i, p.j) > 0; }

template <typename Source>
ElicitationResult adaptive_run(Source& source, const PACParams& params, const AdaptiveOptions& options) {
  if (options.budget < 1) throw InvalidInput("budget must be at least 1");
  if (options.cert_every < 1) throw InvalidInput("cert_every must be at least 1");
  const int k = params.k;
  const Ranking tiebreak = options.tiebreak.value_or(Ranking::identity(k));
  if (tiebreak.size() != k) throw InvalidInput("tiebreak ranking has wrong arm count");

  const BoundPolicy policy{params, options.prune};
  const auto pairs = all_pairs(k);
  const auto& truth = source.truth();

  ElicitationTrace trace;
  trace.optimal_score = solve_kemeny(truth, tiebreak).score;

  IntervalMatrix state = rebuild_intervals(IntervalMatrix(k), policy);
  double bound = approximation_bound(state);
  std::vector<Pair> available;
  available.reserve(pairs.size());

  auto refresh_available = [&] {
    available.clear();
    for (const Pair& p : pairs)
      if (can_draw(source, p)) available.push_back(p);
  };
  refresh_available();

  auto stop_reason = [&](std::int64_t step) -> std::optional<Termination> {
    if (bound <= params.rho + kBoundSlack) return Termination::bound_met;
    if (step >= options.budget) return Termination::budget;
    if (available.empty()) return Termination::exhausted;
    return std::nullopt;
  };

  std::int64_t step = 0;
  std::optional<Termination> stop = stop_reason(step);
  while (!stop) {
    const Pair pair = select_pair(options.strategy, state, available, policy);
    const bool first_wins = source.draw(pair.i, pair.j);
    state.record(pair, first_wins);
    state = rebuild_intervals(std::move(state), policy);
    bound = approximation_bound(state);
    ++step;
    if (!can_draw(source, pair)) refresh_available();

    stop = stop_reason(step);
    TraceStep entry{step, pair, first_wins, state.pulls_hash(), bound, std::nullopt, state.total_pulls()};
    if (step % options.cert_every == 0 || stop) {
      const auto current = solve_kemeny(state.optimistic_matrix(), tiebreak);
      entry.true_gap = kemeny_score(truth, current.ranking) - trace.optimal_score;
    }
    trace.steps.push_back(entry);
  }

  KemenyResult result = solve_kemeny(state.optimistic_matrix(), tiebreak);
  trace.total_samples = step;
  trace.terminated_by = *stop;
  trace.final_bound = bound;
  trace.final_true_gap = kemeny_score(truth, result.ranking) - trace.optimal_score;
  return {std::move(result), std::move(trace)};
}

}  // namespace

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::bound_met:
      return "bound-met";
    case Termination::budget:
      return "budget";
    case Termination::exhausted:
      return "exhausted";
  }
  return "unknown";
}

ElicitationResult kemeny_el_with_replacement(BernoulliOracle& oracle, const PACParams& params) {
  const PACParams p = with_replacement_params(params, oracle.arms());
  const auto t = sample_size_with_replacement(p);
  return fixed_sample_run(oracle, p, t, hoeffding_bound(t, p));
}

ElicitationResult kemeny_el_without_replacement(VoterPool& pool, const PACParams& params) {
  const PACParams p = without_replacement_params(params, pool);
  return fixed_sample_run(pool, p, sample_size_without_replacement(p), offset_without_replacement(p));
}

ElicitationResult adaptive_elicit(BernoulliOracle& oracle, const PACParams& params, const AdaptiveOptions& options) {
  return adaptive_run(oracle, with_replacement_params(params, oracle.arms()), options);
}

ElicitationResult adaptive_elicit(VoterPool& pool, const PACParams& params, const AdaptiveOptions& options) {
  return adaptive_run(pool, without_replacement_params(params, pool), options);
}

std::int64_t default_budget(const PACParams& params) {
  if (params.population) return *params.population * pair_count(params.k);
  return 2 * sample_size_with_replacement(params) * pair_count(params.k);
}

int default_cert_every(int k) { return k <= 6 ? 1 : 10; }

}  // namespace kemeny
