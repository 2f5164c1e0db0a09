#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matchbench/match_types.hpp"
#include "matchbench/scenario.hpp"

namespace matchbench {

/// Outcome of one (dataset pair, matcher config) job.
struct ExperimentResult {
  std::string job_id;
  std::string pair_id;
  ScenarioSpec scenario;
  MatcherConfig config;
  bool ok = false;
  std::string error;             // set when !ok
  double recall = 0.0;           // valid when ok
  std::size_t truth_size = 0;    // cutoff the recall was taken at
  double runtime_seconds = 0.0;  // matching call only
};

/// Fraction of the ground truth found within the top |truth| ranked entries.
double recall_at_ground_truth(const MatchList& matches, const GroundTruth& truth);

struct RecallSummary {
  std::size_t count = 0;
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

/// Median is the lower middle element, so every reported figure is a value
/// that actually occurred.
RecallSummary summarize(std::vector<double> values);

double population_stddev(const std::vector<double>& values);

struct SensitivitySummary {
  std::size_t series_count = 0;
  double stddev_min = 0.0;
  double stddev_median = 0.0;
  double stddev_max = 0.0;
};

/// Spread of an outcome as one knob moves while everything else is held
/// fixed: each series is the outcome sequence of one such sweep, and the
/// summary describes the per-series standard deviations.
SensitivitySummary sensitivity(const std::vector<std::vector<double>>& series);

}  // namespace matchbench
