#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "matchbench/fabricate.hpp"
#include "matchbench/matchers.hpp"
#include "matchbench/metrics.hpp"
#include "matchbench/report.hpp"
#include "matchbench/runner.hpp"
#include "matchbench/synth.hpp"

namespace {

using matchbench::MatcherConfig;
using ordered_json = nlohmann::ordered_json;

MatcherConfig config_from_cli(const std::string& method,
                              const std::vector<std::string>& params) {
  MatcherConfig config;
  config.method = method;
  for (const std::string& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--param", "expected name=value, got '" + p + "'");
    }
    config.params[p.substr(0, eq)] = std::stod(p.substr(eq + 1));
  }
  return config;
}

int cmd_fabricate(const std::string& input, const std::string& out, std::uint64_t seed,
                  std::size_t repeats, const matchbench::NoiseParams& noise) {
  const matchbench::Table table = matchbench::load_csv(input);
  std::vector<matchbench::DatasetPair> pairs;
  std::vector<std::string> warnings;
  for (std::size_t r = 0; r < repeats; ++r) {
    auto made =
        matchbench::fabricate_suite(table, matchbench::Rng::mix(seed, 0x517eULL + r), noise);
    for (auto& w : made.skipped) warnings.push_back(std::move(w));
    for (auto& p : made.pairs) pairs.push_back(std::move(p));
  }
  matchbench::write_pairs_with_manifest(pairs, out);
  std::cout << "wrote " << pairs.size() << " dataset pairs to " << out << "\n";
  for (const auto& w : warnings) std::cerr << "skipped " << w << "\n";
  return 0;
}

int cmd_match(const std::string& source_path, const std::string& target_path,
              const MatcherConfig& config, const std::string& out, bool debug) {
  const matchbench::Table source = matchbench::load_csv(source_path);
  const matchbench::Table target = matchbench::load_csv(target_path);

  matchbench::MatchDebug diagnostics;
  const matchbench::MatchList matches =
      matchbench::match(source, target, config, {}, debug ? &diagnostics : nullptr);

  std::printf("%-5s %-24s %-24s %s\n", "rank", "source", "target", "score");
  std::size_t rank = 1;
  for (const auto& e : matches.entries) {
    std::printf("%-5zu %-24s %-24s %s\n", rank++, e.source_name.c_str(), e.target_name.c_str(),
                matchbench::format_double(e.score).c_str());
  }
  if (debug && !diagnostics.flood_residuals.empty()) {
    std::cerr << "fixpoint " << (diagnostics.flood_converged ? "converged" : "stopped") << " after "
              << diagnostics.flood_iterations << " iterations; residuals:";
    for (const double r : diagnostics.flood_residuals) {
      std::cerr << ' ' << matchbench::format_double(r);
    }
    std::cerr << "\n";
  }

  if (!out.empty()) {
    ordered_json j;
    j["method"] = config.method;
    j["params"] = ordered_json::object();
    for (const auto& [k, v] : config.params) j["params"][k] = v;
    j["matches"] = ordered_json::array();
    for (const auto& e : matches.entries) {
      j["matches"].push_back({{"source_id", e.source_id},
                              {"source_name", e.source_name},
                              {"target_id", e.target_id},
                              {"target_name", e.target_name},
                              {"score", e.score}});
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << j.dump(2) << '\n';
    std::cout << "wrote " << matches.entries.size() << " correspondences to " << out << "\n";
  }
  return 0;
}

int cmd_evaluate(const std::string& matches_path, const std::string& truth_path) {
  std::ifstream f(matches_path);
  if (!f) throw std::runtime_error("cannot open " + matches_path);
  ordered_json j;
  f >> j;

  matchbench::MatchList matches;
  for (const auto& m : j.at("matches")) {
    matches.entries.push_back({m.at("source_id").get<std::string>(),
                               m.value("source_name", std::string{}),
                               m.at("target_id").get<std::string>(),
                               m.value("target_name", std::string{}),
                               m.at("score").get<double>()});
  }
  const matchbench::GroundTruth truth = matchbench::load_truth(truth_path);
  const double recall = matchbench::recall_at_ground_truth(matches, truth);
  std::cout << "recall_at_ground_truth: " << ordered_json(recall).dump() << " (k=" << truth.size()
            << ")\n";
  return 0;
}

int cmd_run_suite(matchbench::SuiteConfig config) {
  const matchbench::SuiteOutcome outcome = matchbench::run_suite(config);
  std::cout << "pairs: " << outcome.pair_count << "\n"
            << "jobs: " << outcome.job_count << " (" << outcome.skipped_existing
            << " already journaled)\n"
            << "completed: " << outcome.completed << "\n"
            << "journal: " << outcome.journal.string() << "\n";
  for (const auto& w : outcome.warnings) std::cerr << "skipped " << w << "\n";
  return outcome.completed == outcome.job_count ? 0 : 3;
}

int cmd_report(const std::string& results_path, const std::string& out) {
  const auto results = matchbench::load_results(results_path);
  matchbench::write_reports(results, out);
  std::cout << "wrote reports for " << results.size() << " result rows to " << out << "\n";
  return 0;
}

int cmd_demo_table(const std::string& out, std::size_t rows, std::uint64_t seed) {
  matchbench::save_csv(matchbench::make_demo_table(rows, seed), out);
  std::cout << "wrote " << rows << "-row demo table to " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schema matching over CSV tables: fabricate related dataset pairs, run matchers, "
               "score them against ground truth"};
  app.require_subcommand(1);

  // fabricate
  std::string fab_input;
  std::string fab_out;
  std::uint64_t fab_seed = 1;
  std::size_t fab_repeats = 1;
  matchbench::NoiseParams fab_noise;
  auto* fab = app.add_subcommand("fabricate", "Fabricate dataset pairs with ground truth");
  fab->add_option("--input", fab_input, "source CSV")->required()->check(CLI::ExistingFile);
  fab->add_option("--out", fab_out, "output directory")->required();
  fab->add_option("--seed", fab_seed, "fabrication seed");
  fab->add_option("--repeats", fab_repeats, "fabrication rounds")->check(CLI::PositiveNumber);
  fab->add_option("--typo-rate", fab_noise.typo_cell_rate, "per-cell noise probability")
      ->check(CLI::Range(0.0, 1.0));
  fab->add_option("--numeric-noise", fab_noise.numeric_noise_scale,
                  "numeric noise scale (fraction of column std-dev)")
      ->check(CLI::NonNegativeNumber);

  // match
  std::string match_source;
  std::string match_target;
  std::string match_method;
  std::vector<std::string> match_params;
  std::string match_out;
  bool match_debug = false;
  auto* mat = app.add_subcommand("match", "Match two CSV tables");
  mat->add_option("--source", match_source, "source CSV")->required()->check(CLI::ExistingFile);
  mat->add_option("--target", match_target, "target CSV")->required()->check(CLI::ExistingFile);
  mat->add_option("--method", match_method,
                  "jaccard-levenshtein | similarity-flooding | cupid | distribution-based")
      ->required();
  mat->add_option("--param", match_params, "method parameter as name=value (repeatable)");
  mat->add_option("--out", match_out, "write the ranked correspondences as JSON");
  mat->add_flag("--debug", match_debug, "print method diagnostics to stderr");

  // evaluate
  std::string eval_matches;
  std::string eval_truth;
  auto* eva = app.add_subcommand("evaluate", "Score a match output against ground truth");
  eva->add_option("--matches", eval_matches, "JSON from 'match --out'")
      ->required()
      ->check(CLI::ExistingFile);
  eva->add_option("--truth", eval_truth, "ground_truth.json of the pair")
      ->required()
      ->check(CLI::ExistingFile);

  // run-suite
  std::string suite_config_path;
  std::vector<std::string> suite_inputs;
  std::string suite_out;
  std::uint64_t suite_seed = 0;
  bool suite_seed_set = false;
  std::size_t suite_workers = 0;
  bool suite_workers_set = false;
  std::size_t suite_repeats = 0;
  auto* run = app.add_subcommand("run-suite", "Fabricate pairs and run the full parameter grid");
  run->add_option("--config", suite_config_path, "suite config JSON")->check(CLI::ExistingFile);
  run->add_option("--input", suite_inputs, "input CSV (repeatable; overrides config)");
  run->add_option("--out", suite_out, "output directory (overrides config)");
  run->add_option("--seed", suite_seed, "suite seed (overrides config)")
      ->each([&](const std::string&) { suite_seed_set = true; });
  run->add_option("--workers", suite_workers, "worker threads, 0 = all cores (overrides config)")
      ->each([&](const std::string&) { suite_workers_set = true; });
  run->add_option("--repeats", suite_repeats, "fabrication rounds (overrides config)")
      ->check(CLI::PositiveNumber);

  // report
  std::string report_results;
  std::string report_out;
  auto* rep = app.add_subcommand("report", "Summarize a results journal into CSV reports");
  rep->add_option("--results", report_results, "results.jsonl from run-suite")
      ->required()
      ->check(CLI::ExistingFile);
  rep->add_option("--out", report_out, "report directory")->required();

  // demo-table
  std::string demo_out;
  std::size_t demo_rows = 200;
  std::uint64_t demo_seed = 1;
  auto* demo = app.add_subcommand("demo-table", "Generate the built-in synthetic table");
  demo->add_option("--out", demo_out, "CSV path")->required();
  demo->add_option("--rows", demo_rows, "row count")->check(CLI::PositiveNumber);
  demo->add_option("--seed", demo_seed, "generation seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fab->parsed()) return cmd_fabricate(fab_input, fab_out, fab_seed, fab_repeats, fab_noise);
    if (mat->parsed()) {
      return cmd_match(match_source, match_target, config_from_cli(match_method, match_params),
                       match_out, match_debug);
    }
    if (eva->parsed()) return cmd_evaluate(eval_matches, eval_truth);
    if (run->parsed()) {
      matchbench::SuiteConfig config;
      if (!suite_config_path.empty()) config = matchbench::load_suite_config(suite_config_path);
      if (!suite_inputs.empty()) config.inputs = suite_inputs;
      if (!suite_out.empty()) config.output_dir = suite_out;
      if (suite_seed_set) config.seed = suite_seed;
      if (suite_workers_set) config.workers = suite_workers;
      if (suite_repeats != 0) config.repeats = suite_repeats;
      return cmd_run_suite(std::move(config));
    }
    if (rep->parsed()) return cmd_report(report_results, report_out);
    if (demo->parsed()) return cmd_demo_table(demo_out, demo_rows, demo_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
