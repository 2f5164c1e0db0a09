#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "matchbench/metrics.hpp"

namespace matchbench {

struct RecallRow {
  std::string scenario_kind;
  std::string method;
  RecallSummary recall;
};

struct RuntimeRow {
  std::string method;
  std::size_t jobs = 0;
  double mean_runtime_seconds = 0.0;
};

struct SensitivityRow {
  std::string method;
  std::string parameter;
  SensitivitySummary summary;
};

/// Recall spread per (scenario kind, method) over successful jobs.
std::vector<RecallRow> recall_rows(const std::vector<ExperimentResult>& results);

/// Mean matching time per method over successful jobs.
std::vector<RuntimeRow> runtime_rows(const std::vector<ExperimentResult>& results);

/// One row per (method, parameter): the parameter is swept while the pair
/// and all other parameters stay fixed, each sweep giving one recall series.
/// Parameters that never take two values produce no row.
std::vector<SensitivityRow> sensitivity_rows(const std::vector<ExperimentResult>& results);

/// Writes recall_summary.csv, sensitivity.csv and runtime.csv.
void write_reports(const std::vector<ExperimentResult>& results,
                   const std::filesystem::path& out_dir);

}  // namespace matchbench
