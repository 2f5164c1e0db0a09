#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "matchbench/fabricate.hpp"
#include "matchbench/grid.hpp"
#include "matchbench/metrics.hpp"

namespace matchbench {

struct SuiteConfig {
  /// CSV files to fabricate dataset pairs from.
  std::vector<std::string> inputs;
  std::string output_dir;
  std::uint64_t seed = 1;
  /// Fabrication rounds per input; every round redraws the scenario seeds.
  std::size_t repeats = 1;
  /// 0 picks the hardware thread count.
  std::size_t workers = 0;
  /// Per-job wall clock budget; 0 or less disables the limit.
  double job_timeout_seconds = 300.0;
  NoiseParams noise;
  /// Empty uses default_grid_specs().
  std::vector<GridSpec> grids;
  /// Stop after this many newly completed jobs (testing hook; the journal
  /// stays resumable).
  std::optional<std::size_t> max_jobs;
};

SuiteConfig load_suite_config(const std::filesystem::path& file);

struct SuiteOutcome {
  std::size_t pair_count = 0;
  std::size_t job_count = 0;         // planned (pairs x configs)
  std::size_t completed = 0;         // journal rows after the run
  std::size_t skipped_existing = 0;  // jobs already in the journal
  std::vector<std::string> warnings;
  std::filesystem::path journal;
  std::filesystem::path pairs_dir;
};

/// Stable job identity: hex digest of the pair id and the canonical config.
std::string job_id_for(const std::string& pair_id, const MatcherConfig& config);

/// Fabricates all pairs, runs every (pair, config) job on a thread pool and
/// appends one JSON line per finished job to <output_dir>/results.jsonl.
/// Jobs already present in the journal are not rerun, so an interrupted
/// suite continues where it stopped. A job that throws (including timeouts)
/// becomes a "failed" row rather than ending the suite.
SuiteOutcome run_suite(const SuiteConfig& config);

/// Parses a results journal. An incomplete final line (a crash mid-append)
/// is dropped; corruption anywhere else is an error. When a job id appears
/// twice the later row wins.
std::vector<ExperimentResult> load_results(const std::filesystem::path& journal);

}  // namespace matchbench
