#pragma once

#include <string>
#include <vector>

#include "matchbench/match_types.hpp"

namespace matchbench {

struct GridAxis {
  std::string name;
  std::vector<double> values;
};

/// One method's parameter grid; the cartesian product of the axes is the set
/// of configs to run. A method may appear in several specs (e.g. the
/// distribution matcher has a strict and a permissive threshold block).
struct GridSpec {
  std::string method;
  std::vector<GridAxis> axes;
};

/// Inclusive [start, stop] by step, computed with integer multiples and
/// snapped to 9 decimals so 0.1 steps land exactly on 0.4, 0.5, ...
std::vector<double> step_range(double start, double stop, double step);

/// Cartesian product, last axis varying fastest.
std::vector<MatcherConfig> expand_grid(const GridSpec& spec);
std::vector<MatcherConfig> expand_grids(const std::vector<GridSpec>& specs);

/// Grids for the four methods this library runs (120 configs).
std::vector<GridSpec> default_grid_specs();

/// default_grid_specs() plus placeholder grids for methods tracked for
/// comparison but not implemented here (135 configs in total). Expanding
/// these is fine; running them reports an unknown method.
std::vector<GridSpec> full_grid_specs();

}  // namespace matchbench
