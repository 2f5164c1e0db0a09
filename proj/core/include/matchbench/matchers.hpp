#pragma once

#include <cstddef>
#include <vector>

#include "matchbench/match_types.hpp"
#include "matchbench/table.hpp"

namespace matchbench {

/// Extra diagnostics a match() call can surface, filled only where the
/// method produces them.
struct MatchDebug {
  std::vector<double> flood_residuals;
  bool flood_converged = false;
  std::size_t flood_iterations = 0;
};

/// Runs the configured method on a table pair. Throws std::invalid_argument
/// for an unknown method name or a parameter the method does not take, and
/// MatchTimeout when limits expire mid-run.
MatchList match(const Table& source, const Table& target, const MatcherConfig& config,
                const MatchLimits& limits = {}, MatchDebug* debug = nullptr);

}  // namespace matchbench
