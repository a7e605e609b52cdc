#include "kemeny/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <istream>
#include <sstream>
#include <thread>

#include "kemeny/errors.hpp"
#include "kemeny/oracles.hpp"
#include "kemeny/report.hpp"

namespace kemeny {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("bad value for " + std::string(key) + ": '" + std::string(value) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "on" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "off" || value == "0" || value == "no") return false;
  throw ConfigError("bad boolean for " + std::string(key) + ": '" + std::string(value) + "'");
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (start <= value.size()) {
    const auto end = value.find_first_of(", ", start);
    const auto item = trim(value.substr(start, end == std::string_view::npos ? value.size() - start : end - start));
    if (!item.empty()) items.push_back(item);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return items;
}

std::string trace_name(std::int64_t instance, StrategyKind s) {
  std::ostringstream name;
  name << "trace_" << instance << '_' << to_string(s) << ".csv";
  return name.str();
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

}  // namespace

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::uniform:
      return "uniform";
    case Generator::mallows:
      return "mallows";
    case Generator::single_peaked:
      return "single-peaked";
  }
  return "unknown";
}

std::string_view to_string(SamplingMode m) {
  return m == SamplingMode::with_replacement ? "with-replacement" : "without-replacement";
}

double ExperimentConfig::effective_rho() const {
  return rho.value_or(rho_frac * static_cast<double>(pair_count(k)));
}

PACParams ExperimentConfig::params() const {
  std::optional<std::int64_t> population;
  if (mode == SamplingMode::without_replacement) population = n;
  return PACParams::make(k, effective_rho(), delta, population);
}

std::int64_t ExperimentConfig::effective_budget() const { return budget.value_or(default_budget(params())); }

int ExperimentConfig::effective_cert_every() const { return cert_every.value_or(default_cert_every(k)); }

void ExperimentConfig::validate() const {
  if (k < 2 || k > kSolverMaxArms) throw ConfigError("k must lie in [2, 20]");
  if (n < 1) throw ConfigError("n must be positive");
  if (instances < 1) throw ConfigError("instances must be positive");
  if (strategies.empty()) throw ConfigError("at least one strategy is required");
  if (generator == Generator::mallows && !(phi > 0.0 && phi <= 1.0)) throw ConfigError("phi must lie in (0, 1]");
  if (reference && reference->size() != k) throw ConfigError("reference ranking must list k arms");
  if (cert_every && *cert_every < 1) throw ConfigError("cert-every must be positive");
  if (budget && *budget < 1) throw ConfigError("budget must be positive");
  try {
    (void)params();
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }
}

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "k") {
    cfg.k = parse_number<int>(key, value);
  } else if (key == "n") {
    cfg.n = parse_number<std::int64_t>(key, value);
  } else if (key == "rho") {
    cfg.rho = parse_number<double>(key, value);
  } else if (key == "rho-frac" || key == "rho_frac") {
    cfg.rho_frac = parse_number<double>(key, value);
    cfg.rho.reset();
  } else if (key == "delta") {
    cfg.delta = parse_number<double>(key, value);
  } else if (key == "generator") {
    if (value == "uniform") {
      cfg.generator = Generator::uniform;
    } else if (value == "mallows") {
      cfg.generator = Generator::mallows;
    } else if (value == "single-peaked" || value == "single_peaked") {
      cfg.generator = Generator::single_peaked;
    } else {
      throw ConfigError("unknown generator '" + std::string(value) + "'");
    }
  } else if (key == "phi") {
    cfg.phi = parse_number<double>(key, value);
  } else if (key == "reference") {
    std::vector<Arm> order;
    for (auto item : split_list(value)) order.push_back(parse_number<int>(key, item));
    try {
      cfg.reference = Ranking(std::move(order));
    } catch (const InvalidInput& e) {
      throw ConfigError(std::string("reference: ") + e.what());
    }
  } else if (key == "mode") {
    if (value == "with-replacement" || value == "with_replacement") {
      cfg.mode = SamplingMode::with_replacement;
    } else if (value == "without-replacement" || value == "without_replacement") {
      cfg.mode = SamplingMode::without_replacement;
    } else {
      throw ConfigError("unknown mode '" + std::string(value) + "'");
    }
  } else if (key == "strategies") {
    cfg.strategies.clear();
    for (auto item : split_list(value)) {
      if (item == "all") {
        cfg.strategies = ExperimentConfig{}.strategies;
        continue;
      }
      const auto s = parse_strategy(item);
      if (!s) throw ConfigError("unknown strategy '" + std::string(item) + "'");
      if (std::find(cfg.strategies.begin(), cfg.strategies.end(), *s) == cfg.strategies.end()) {
        cfg.strategies.push_back(*s);
      }
    }
  } else if (key == "prune") {
    cfg.prune = parse_bool(key, value);
  } else if (key == "instances") {
    cfg.instances = parse_number<std::int64_t>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "cert-every" || key == "cert_every") {
    cfg.cert_every = parse_number<int>(key, value);
  } else if (key == "budget") {
    cfg.budget = parse_number<std::int64_t>(key, value);
  } else if (key == "out" || key == "output_dir") {
    cfg.output_dir = std::string(value);
  } else if (key == "jobs") {
    cfg.jobs = parse_number<unsigned>(key, value);
  } else {
    throw ConfigError("unknown setting '" + std::string(key) + "'");
  }
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(line) + ": expected key = value");
    try {
      apply_setting(base, text.substr(0, eq), text.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return base;
}

PreferenceProfile generate_instance(const ExperimentConfig& cfg, std::int64_t instance) {
  Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(instance), 0));
  switch (cfg.generator) {
    case Generator::uniform:
      return gen_uniform_profile(cfg.k, cfg.n, rng);
    case Generator::mallows:
      return gen_mallows_profile(cfg.k, cfg.n, cfg.phi, cfg.reference.value_or(Ranking::identity(cfg.k)), rng);
    case Generator::single_peaked:
      return gen_single_peaked_profile(cfg.k, cfg.n, rng);
  }
  throw ConfigError("unknown generator");
}

std::uint64_t sampling_seed(const ExperimentConfig& cfg, std::int64_t instance) {
  return derive_seed(cfg.seed, static_cast<std::uint64_t>(instance), 1);
}

std::vector<InstanceRun> run_instances(const ExperimentConfig& cfg) {
  cfg.validate();
  const PACParams params = cfg.params();
  AdaptiveOptions options;
  options.prune = cfg.prune;
  options.budget = cfg.effective_budget();
  options.cert_every = cfg.effective_cert_every();

  const auto instances = static_cast<std::size_t>(cfg.instances);
  const auto per_instance = cfg.strategies.size();
  std::vector<std::optional<InstanceRun>> slots(instances * per_instance);
  std::vector<std::exception_ptr> errors(instances);
  std::atomic<std::size_t> next{0};

  // One task per instance; the strategies of an instance share its profile.
  auto worker = [&] {
    for (std::size_t inst = next++; inst < instances; inst = next++) {
      try {
        const auto instance = static_cast<std::int64_t>(inst);
        const PreferenceProfile profile = generate_instance(cfg, instance);
        const WinMatrix truth = profile_to_matrix(profile);
        for (std::size_t s = 0; s < per_instance; ++s) {
          AdaptiveOptions opts = options;
          opts.strategy = cfg.strategies[s];
          ElicitationResult result = [&] {
            if (cfg.mode == SamplingMode::with_replacement) {
              BernoulliOracle oracle(truth, sampling_seed(cfg, instance));
              return adaptive_elicit(oracle, params, opts);
            }
            VoterPool pool(profile, sampling_seed(cfg, instance));
            return adaptive_elicit(pool, params, opts);
          }();
          slots[inst * per_instance + s] = InstanceRun{instance, cfg.strategies[s], std::move(result)};
        }
      } catch (...) {
        errors[inst] = std::current_exception();
      }
    }
  };

  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, instances));
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<InstanceRun> runs;
  runs.reserve(slots.size());
  for (auto& slot : slots) runs.push_back(std::move(*slot));
  return runs;
}

ExperimentSummary summarize(const ExperimentConfig& cfg, const std::vector<InstanceRun>& runs) {
  ExperimentSummary summary;
  const PACParams params = cfg.params();
  const std::int64_t per_pair = params.population ? sample_size_without_replacement(params)
                                                  : sample_size_with_replacement(params);
  summary.theoretical_samples = per_pair * pair_count(cfg.k);

  double optimal_total = 0.0;
  std::int64_t counted = 0;
  for (const auto& run : runs) {
    if (run.strategy != cfg.strategies.front()) continue;
    optimal_total += run.result.trace.optimal_score;
    ++counted;
  }
  summary.mean_optimal_score = counted ? optimal_total / static_cast<double>(counted) : 0.0;

  for (StrategyKind s : cfg.strategies) {
    StrategySummary st{s};
    std::int64_t count = 0;
    for (const auto& run : runs) {
      if (run.strategy != s) continue;
      const auto& t = run.result.trace;
      st.mean_samples += static_cast<double>(t.total_samples);
      st.mean_final_bound += t.final_bound;
      st.mean_final_true_gap += t.final_true_gap;
      if (t.terminated_by == Termination::bound_met) ++st.bound_met;
      ++count;
    }
    if (count) {
      st.mean_samples /= static_cast<double>(count);
      st.mean_final_bound /= static_cast<double>(count);
      st.mean_final_true_gap /= static_cast<double>(count);
    }
    summary.strategies.push_back(st);
  }
  return summary;
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) throw IoError("cannot create " + cfg.output_dir.string() + ": " + ec.message());

  const auto runs = run_instances(cfg);
  ExperimentSummary summary = summarize(cfg, runs);

  for (const auto& run : runs) {
    const auto path = cfg.output_dir / trace_name(run.instance, run.strategy);
    auto out = open_output(path);
    write_trace_csv(out, run.result.trace);
    summary.files.push_back(path);
  }

  std::vector<Series> series;
  for (StrategyKind s : cfg.strategies) {
    std::vector<const ElicitationTrace*> traces;
    for (const auto& run : runs)
      if (run.strategy == s) traces.push_back(&run.result.trace);
    Series line{std::string(to_string(s)), aggregate_traces(traces)};
    const auto path = cfg.output_dir / ("aggregate_" + line.name + ".csv");
    auto out = open_output(path);
    write_aggregate_csv(out, line.name, line.rows);
    summary.files.push_back(path);
    series.push_back(std::move(line));
  }

  {
    const auto path = cfg.output_dir / "comparison.svg";
    auto out = open_output(path);
    std::ostringstream title;
    title << "k=" << cfg.k << " n=" << cfg.n << " rho=" << format_number(cfg.effective_rho()) << ' '
          << to_string(cfg.mode) << (cfg.prune ? " pruned" : "") << ", " << cfg.instances << " instances";
    write_comparison_svg(out, series, cfg.effective_rho(), title.str());
    summary.files.push_back(path);
  }

  {
    const auto path = cfg.output_dir / "summary.txt";
    auto out = open_output(path);
    out << "k = " << cfg.k << "\nn = " << cfg.n << "\nrho = " << format_number(cfg.effective_rho())
        << "\ndelta = " << format_number(cfg.delta) << "\ngenerator = " << to_string(cfg.generator)
        << "\nmode = " << to_string(cfg.mode) << "\nprune = " << (cfg.prune ? "true" : "false")
        << "\ninstances = " << cfg.instances << "\nseed = " << cfg.seed
        << "\nmean_true_kemeny_score = " << format_number(summary.mean_optimal_score)
        << "\ntheoretical_samples = " << summary.theoretical_samples << '\n';
    for (const auto& st : summary.strategies) {
      const auto name = std::string(to_string(st.strategy));
      out << name << ".mean_samples = " << format_number(st.mean_samples) << '\n'
          << name << ".mean_final_bound = " << format_number(st.mean_final_bound) << '\n'
          << name << ".mean_final_true_gap = " << format_number(st.mean_final_true_gap) << '\n'
          << name << ".bound_met = " << st.bound_met << '\n';
    }
    summary.files.push_back(path);
  }
  return summary;
}

}  // namespace kemeny
