#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kemeny/confidence.hpp"
#include "kemeny/elicitation.hpp"
#include "kemeny/preferences.hpp"
#include "kemeny/strategies.hpp"

namespace kemeny {

enum class Generator { uniform, mallows, single_peaked };
enum class SamplingMode { with_replacement, without_replacement };

std::string_view to_string(Generator g);
std::string_view to_string(SamplingMode m);

struct ExperimentConfig {
  int k = 4;
  std::int64_t n = 10;
  std::optional<double> rho;  ///< absolute; overrides rho_frac
  double rho_frac = 0.1;      ///< fraction of k(k-1)/2
  double delta = 0.05;
  Generator generator = Generator::uniform;
  double phi = 0.2;
  std::optional<Ranking> reference;  ///< Mallows centre, identity when empty
  SamplingMode mode = SamplingMode::without_replacement;
  std::vector<StrategyKind> strategies{StrategyKind::uniform, StrategyKind::opportunistic, StrategyKind::optimistic,
                                       StrategyKind::pessimistic, StrategyKind::bayesian};
  bool prune = true;
  std::int64_t instances = 10;
  std::uint64_t seed = 24;
  std::optional<int> cert_every;
  std::optional<std::int64_t> budget;
  std::filesystem::path output_dir = "out";
  unsigned jobs = 0;  ///< 0 = hardware concurrency

  double effective_rho() const;
  PACParams params() const;
  std::int64_t effective_budget() const;
  int effective_cert_every() const;

  /// Throws ConfigError on the first inconsistency.
  void validate() const;
};

/// Applies one `key = value` setting; keys match the long CLI flags without "--"
/// (k, n, rho, rho-frac, delta, generator, phi, reference, mode, strategies,
/// prune, instances, seed, cert-every, budget, out, jobs). Throws ConfigError.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// `key = value` lines; '#' starts a comment.
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});

/// Profile for one instance; depends only on (seed, instance).
PreferenceProfile generate_instance(const ExperimentConfig& cfg, std::int64_t instance);

/// Seed of the sampling oracle for one instance, shared by every strategy.
std::uint64_t sampling_seed(const ExperimentConfig& cfg, std::int64_t instance);

struct InstanceRun {
  std::int64_t instance;
  StrategyKind strategy;
  ElicitationResult result;
};

/// Runs every strategy on every instance, ordered by (instance, strategy).
std::vector<InstanceRun> run_instances(const ExperimentConfig& cfg);

struct StrategySummary {
  StrategyKind strategy;
  double mean_samples = 0.0;
  double mean_final_bound = 0.0;
  double mean_final_true_gap = 0.0;
  std::int64_t bound_met = 0;
};

struct ExperimentSummary {
  double mean_optimal_score = 0.0;
  std::int64_t theoretical_samples = 0;  ///< per-pair sample size times k(k-1)/2
  std::vector<StrategySummary> strategies;
  std::vector<std::filesystem::path> files;
};

ExperimentSummary summarize(const ExperimentConfig& cfg, const std::vector<InstanceRun>& runs);

/// Runs, then writes trace_<instance>_<strategy>.csv, aggregate_<strategy>.csv,
/// comparison.svg and summary.txt under cfg.output_dir. Throws IoError.
ExperimentSummary run_experiment(const ExperimentConfig& cfg);

}  // namespace kemeny
