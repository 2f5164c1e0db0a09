#include "matchbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace matchbench {

double recall_at_ground_truth(const MatchList& matches, const GroundTruth& truth) {
  if (truth.pairs().empty()) throw std::invalid_argument("ground truth is empty");
  const std::size_t k = truth.pairs().size();
  const std::size_t cutoff = std::min(k, matches.entries.size());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < cutoff; ++i) {
    const MatchEntry& e = matches.entries[i];
    if (truth.contains(e.source_id, e.target_id)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

RecallSummary summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("nothing to summarize");
  std::sort(values.begin(), values.end());
  RecallSummary s;
  s.count = values.size();
  s.min = values.front();
  s.median = values[(values.size() - 1) / 2];
  s.max = values.back();
  return s;
}

double population_stddev(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("nothing to aggregate");
  double mean = 0.0;
  for (const double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (const double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size());
  return std::sqrt(var);
}

SensitivitySummary sensitivity(const std::vector<std::vector<double>>& series) {
  if (series.empty()) throw std::invalid_argument("no series given");
  std::vector<double> deviations;
  deviations.reserve(series.size());
  for (const auto& s : series) {
    if (s.size() < 2) throw std::invalid_argument("a sweep needs at least two points");
    deviations.push_back(population_stddev(s));
  }
  const RecallSummary agg = summarize(std::move(deviations));
  return {agg.count, agg.min, agg.median, agg.max};
}

}  // namespace matchbench
