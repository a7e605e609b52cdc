// kemeny-el: experiment runner and matrix utilities.
//
// Exit codes: 0 success, 1 configuration or input error, 2 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/experiment.hpp"
#include "kemeny/io.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/preferences.hpp"
#include "kemeny/report.hpp"

namespace {

using namespace kemeny;

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

// 5 decimals, trailing zeros dropped but at least one kept: 1.33333, 1.0, 0.5.
std::string format_score(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  std::string s = buf;
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

Ranking parse_ranking_list(const std::string& text) {
  std::vector<Arm> order;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::istringstream num(item);
    int a;
    if (!(num >> a)) throw ConfigError("bad arm list '" + text + "'");
    order.push_back(a);
  }
  try {
    return Ranking(std::move(order));
  } catch (const InvalidInput& e) {
    throw ConfigError(std::string("ranking: ") + e.what());
  }
}

int report_validation(const SquareMatrix& entries, std::optional<std::int64_t> n) {
  WinMatrix q = [&] {
    try {
      return WinMatrix::from_entries(entries);
    } catch (const InvalidInput& e) {
      throw ConfigError(std::string("not a winning-probability matrix: ") + e.what());
    }
  }();
  bool all_pass = true;

  if (n) {
    const bool ok = check_completeness(q, *n);
    all_pass &= ok;
    std::cout << "completeness: " << (ok ? "PASS" : "FAIL") << " (n=" << *n << ")\n";
  } else {
    std::cout << "completeness: SKIPPED (n unspecified)\n";
  }

  const auto triples = check_triangle(q);
  all_pass &= triples.empty();
  std::cout << "triangle: " << (triples.empty() ? "PASS" : "FAIL");
  if (!triples.empty()) std::cout << " (" << triples.size() << " violating triples)";
  std::cout << '\n';
  for (const auto& t : triples) {
    std::cout << "  (l,j,i)=(" << t.l + 1 << ',' << t.j + 1 << ',' << t.i + 1 << "): q_lj + q_ji = "
              << format_number(q(t.l, t.j) + q(t.j, t.i)) << " < q_li = " << format_number(q(t.l, t.i)) << '\n';
  }

  const auto borda = borda_violations(q);
  all_pass &= borda.empty();
  std::cout << "borda: " << (borda.empty() ? "PASS" : "FAIL") << '\n';
  for (const auto& v : borda) {
    std::cout << "  A={";
    for (std::size_t x = 0; x < v.arms.size(); ++x) std::cout << (x ? "," : "") << v.arms[x] + 1;
    std::cout << "}: row sums " << format_number(v.row_sum_total) << " > bound " << format_number(v.bound) << '\n';
  }
  std::cout << (all_pass ? "all checks passed" : "some checks failed") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dueling-bandit elicitation of approximate Kemeny rankings"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run an elicitation experiment");
  std::string config_path;
  run->add_option("--config", config_path, "key = value settings file")->check(CLI::ExistingFile);
  const std::vector<std::pair<std::string, std::string>> run_flags{
      {"k", "number of arms"},
      {"n", "number of voters"},
      {"rho", "absolute target score gap"},
      {"rho-frac", "target gap as a fraction of k(k-1)/2 (default 0.1)"},
      {"delta", "failure probability (default 0.05)"},
      {"generator", "uniform | mallows | single-peaked"},
      {"phi", "Mallows dispersion in (0, 1]"},
      {"reference", "Mallows reference ranking, comma-separated 0-based arms"},
      {"mode", "with-replacement | without-replacement"},
      {"strategies", "comma list of uniform,opportunistic,optimistic,pessimistic,bayesian or 'all'"},
      {"prune", "true | false"},
      {"instances", "number of generated instances"},
      {"seed", "master seed"},
      {"cert-every", "solve the Kemeny ranking every this many steps"},
      {"budget", "maximum samples per run"},
      {"out", "output directory"},
      {"jobs", "worker threads (0 = all cores)"},
  };
  std::vector<std::string> run_values(run_flags.size());
  std::vector<CLI::Option*> run_options;
  for (std::size_t f = 0; f < run_flags.size(); ++f) {
    run_options.push_back(run->add_option("--" + run_flags[f].first, run_values[f], run_flags[f].second));
  }

  // validate
  auto* validate = app.add_subcommand("validate", "Check a matrix or profile file for realisability");
  std::string validate_path;
  std::int64_t validate_n = 0;
  validate->add_option("file", validate_path, "matrix or profile file")->required();
  auto* validate_n_opt = validate->add_option("--n", validate_n, "voter count for the completeness check");

  // solve
  auto* solve = app.add_subcommand("solve", "Exact Kemeny ranking of a matrix or profile file");
  std::string solve_path;
  std::string tiebreak_text;
  solve->add_option("file", solve_path, "matrix or profile file")->required();
  solve->add_option("--tiebreak", tiebreak_text, "tie-break ranking, comma-separated 0-based arms");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a preference profile file");
  int gen_k = 4;
  std::int64_t gen_n = 10;
  std::string gen_generator = "uniform";
  double gen_phi = 0.2;
  std::string gen_reference;
  std::uint64_t gen_seed = 24;
  std::string gen_out;
  gen->add_option("--k", gen_k, "number of arms");
  gen->add_option("--n", gen_n, "number of voters");
  gen->add_option("--generator", gen_generator, "uniform | mallows | single-peaked");
  gen->add_option("--phi", gen_phi, "Mallows dispersion");
  gen->add_option("--reference", gen_reference, "Mallows reference, comma-separated 0-based arms");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (run->parsed()) {
      ExperimentConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw IoError("cannot open " + config_path);
        cfg = parse_config(in);
      }
      for (std::size_t f = 0; f < run_flags.size(); ++f) {
        if (run_options[f]->count()) apply_setting(cfg, run_flags[f].first, run_values[f]);
      }
      cfg.validate();
      const auto summary = run_experiment(cfg);
      std::cout << "mean true Kemeny score: " << format_number(summary.mean_optimal_score) << '\n'
                << "theoretical samples: " << summary.theoretical_samples << '\n';
      for (const auto& st : summary.strategies) {
        std::cout << to_string(st.strategy) << ": mean samples " << format_number(st.mean_samples)
                  << ", mean final bound " << format_number(st.mean_final_bound) << ", mean final true gap "
                  << format_number(st.mean_final_true_gap) << ", bound met " << st.bound_met << '/'
                  << cfg.instances << '\n';
      }
      std::cout << "wrote " << summary.files.size() << " files to " << cfg.output_dir.string() << '\n';
      return 0;
    }

    if (validate->parsed()) {
      const auto input = load_matrix_or_profile(validate_path);
      std::optional<std::int64_t> n;
      if (validate_n_opt->count()) n = validate_n;
      if (const auto* profile = std::get_if<PreferenceProfile>(&input)) {
        if (!n) n = profile->voters();
        return report_validation(profile_to_matrix(*profile).entries(), n);
      }
      return report_validation(std::get<SquareMatrix>(input), n);
    }

    if (solve->parsed()) {
      const auto input = load_matrix_or_profile(solve_path);
      const int k = std::visit(
          [](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, SquareMatrix>) {
              return v.size();
            } else {
              return v.arms();
            }
          },
          input);
      const Ranking tiebreak = tiebreak_text.empty() ? Ranking::identity(k) : parse_ranking_list(tiebreak_text);
      if (tiebreak.size() != k) throw ConfigError("tie-break ranking must list every arm");
      const KemenyResult result = std::holds_alternative<PreferenceProfile>(input)
                                      ? solve_kemeny(profile_to_matrix(std::get<PreferenceProfile>(input)), tiebreak)
                                      : solve_kemeny(std::get<SquareMatrix>(input), tiebreak);
      std::cout << result.ranking.to_string() << " score=" << format_score(result.score) << '\n';
      return 0;
    }

    if (gen->parsed()) {
      ExperimentConfig cfg;
      apply_setting(cfg, "generator", gen_generator);
      Rng rng(gen_seed);
      const Ranking reference = gen_reference.empty() ? Ranking::identity(gen_k) : parse_ranking_list(gen_reference);
      const PreferenceProfile profile = [&] {
        switch (cfg.generator) {
          case Generator::mallows:
            return gen_mallows_profile(gen_k, gen_n, gen_phi, reference, rng);
          case Generator::single_peaked:
            return gen_single_peaked_profile(gen_k, gen_n, rng);
          default:
            return gen_uniform_profile(gen_k, gen_n, rng);
        }
      }();
      if (gen_out.empty()) {
        write_profile(std::cout, profile);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw IoError("cannot write " + gen_out);
        write_profile(out, profile);
      }
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
