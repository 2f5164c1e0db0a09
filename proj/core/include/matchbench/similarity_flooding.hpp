#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matchbench/match_types.hpp"
#include "matchbench/table.hpp"

namespace matchbench {

inline constexpr double kFloodEpsilon = 1e-3;
inline constexpr std::size_t kFloodMaxIterations = 100;

/// Pairwise propagation graph over two table graphs. Each table is encoded
/// as  table -[column]-> column -[name]-> name literal  and
/// column -[type]-> kind literal; literal nodes are shared per value within
/// one table. Node pairs exist where both graphs carry an equally labeled
/// edge, and every such edge contributes propagation arcs in both directions
/// with inverse-average coefficients: forward 2/(outdeg(a)+outdeg(b)),
/// reverse 2/(indeg(a')+indeg(b')), degrees counted per label.
struct PropagationGraph {
  enum class PairKind { tables, columns, names, kinds };

  struct PairNode {
    PairKind kind;
    /// Column ids for column pairs, literal text otherwise.
    std::string left;
    std::string right;
    double seed = 0.0;  // initial similarity
  };

  struct Arc {
    std::size_t from;
    std::size_t to;
    std::string label;
    double weight;
  };

  std::vector<PairNode> nodes;
  std::vector<Arc> arcs;

  static PropagationGraph build(const Table& source, const Table& target);
};

struct FloodResult {
  MatchList matches;
  /// Euclidean residual after each iteration.
  std::vector<double> residuals;
  bool converged = false;
  std::size_t iterations = 0;
};

/// Fixpoint: sigma' = normalize(sigma0 + sigma + propagate(sigma0 + sigma)),
/// normalize dividing by the maximum entry. Stops when the residual drops
/// below epsilon or after max_iterations (best effort result, converged
/// stays false).
FloodResult similarity_flooding_flood(const Table& source, const Table& target,
                                      double epsilon = kFloodEpsilon,
                                      std::size_t max_iterations = kFloodMaxIterations,
                                      const MatchLimits& limits = {});

MatchList similarity_flooding_match(const Table& source, const Table& target,
                                    const MatchLimits& limits = {});

}  // namespace matchbench
