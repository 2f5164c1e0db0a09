#include "matchbench/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace matchbench {

std::vector<double> step_range(double start, double stop, double step) {
  if (step <= 0.0) throw std::invalid_argument("step must be positive");
  if (stop < start) throw std::invalid_argument("stop must not precede start");
  const long long count = std::llround((stop - start) / step);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  for (long long i = 0; i <= count; ++i) {
    out.push_back(std::round((start + step * static_cast<double>(i)) * 1e9) / 1e9);
  }
  return out;
}

std::vector<MatcherConfig> expand_grid(const GridSpec& spec) {
  if (spec.method.empty()) throw std::invalid_argument("grid spec needs a method");
  std::size_t total = 1;
  for (const GridAxis& axis : spec.axes) {
    if (axis.values.empty()) {
      throw std::invalid_argument("axis '" + axis.name + "' has no values");
    }
    total *= axis.values.size();
  }
  std::vector<MatcherConfig> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    MatcherConfig config;
    config.method = spec.method;
    std::size_t rem = i;
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
      const GridAxis& axis = spec.axes[a];
      config.params[axis.name] = axis.values[rem % axis.values.size()];
      rem /= axis.values.size();
    }
    out.push_back(std::move(config));
  }
  return out;
}

std::vector<MatcherConfig> expand_grids(const std::vector<GridSpec>& specs) {
  std::vector<MatcherConfig> out;
  for (const GridSpec& spec : specs) {
    std::vector<MatcherConfig> block = expand_grid(spec);
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return out;
}

std::vector<GridSpec> default_grid_specs() {
  std::vector<GridSpec> specs;
  specs.push_back({"cupid",
                   {{"leaf_w_struct", step_range(0.0, 0.6, 0.2)},
                    {"w_struct", step_range(0.0, 0.6, 0.2)},
                    {"th_accept", step_range(0.3, 0.8, 0.1)}}});
  specs.push_back({"similarity-flooding", {}});
  // Strict thresholds, then a permissive block for low-overlap pairs.
  specs.push_back({"distribution-based",
                   {{"phase1_theta", step_range(0.1, 0.2, 0.05)},
                    {"phase2_theta", step_range(0.1, 0.2, 0.05)}}});
  specs.push_back({"distribution-based",
                   {{"phase1_theta", step_range(0.3, 0.5, 0.1)},
                    {"phase2_theta", step_range(0.3, 0.5, 0.1)}}});
  specs.push_back({"jaccard-levenshtein", {{"threshold", step_range(0.4, 0.8, 0.1)}}});
  return specs;
}

std::vector<GridSpec> full_grid_specs() {
  std::vector<GridSpec> specs = default_grid_specs();
  // Comparison methods running outside this library; strategy and training
  // choices are tracked as numeric codes.
  specs.push_back({"coma", {{"strategy", {0.0, 1.0}}, {"threshold", {0.0}}}});
  specs.push_back({"semantic-prop",
                   {{"minhash_threshold", step_range(0.2, 0.3, 0.1)},
                    {"semantic_threshold", step_range(0.4, 0.6, 0.1)},
                    {"coherent_semantic_threshold", step_range(0.2, 0.4, 0.2)}}});
  specs.push_back({"embdi",
                   {{"training_algorithm", {0.0}},
                    {"sentence_length", {60.0}},
                    {"window_size", {3.0}},
                    {"n_dimensions", {300.0}}}});
  return specs;
}

}  // namespace matchbench
