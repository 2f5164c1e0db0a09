#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matchbench/match_types.hpp"
#include "matchbench/table.hpp"

namespace matchbench {

/// Earth mover's distance between two equal-length sorted quantile vectors
/// with equal bin masses: the mean absolute componentwise difference.
double emd_1d(const std::vector<double>& h1, const std::vector<double>& h2);

/// q evenly spaced order statistics of a sorted vector: out[i] = v[i*n/q].
std::vector<double> quantiles_of_sorted(const std::vector<double>& sorted_values, std::size_t q);

/// Quantile sketch of one column over its own value domain. Numeric columns
/// are min-max normalized; textual columns are mapped to normalized
/// lexicographic ranks. Errors on an empty column or q == 0.
std::vector<double> column_quantiles(const Column& column, std::size_t q);

/// EMD between two numeric value multisets, normalized over their combined
/// min-max range so that location offsets are preserved. Bin count is
/// min(max_bins, distinct values of either side).
double numeric_pair_emd(std::vector<double> a, std::vector<double> b, std::size_t max_bins);

/// EMD between two string value multisets over the combined lexicographic
/// rank space.
double textual_pair_emd(std::vector<std::string> a, std::vector<std::string> b,
                        std::size_t max_bins);

struct DistributionParams {
  double phase1_theta = 0.15;
  double phase2_theta = 0.15;
  std::size_t max_bins = 100;
};

/// Two-phase distribution clustering. Phase 1 links any two columns (intra-
/// or cross-table) whose quantile EMD is within phase1_theta and takes
/// connected components as candidate clusters. Phase 2 restricts each
/// cluster column to the values it shares with the cluster's pool (values
/// held by at least two member columns), recomputes EMD, and keeps links
/// within phase2_theta. A final exact branch-and-bound picks disjoint
/// sub-clusters of maximum total link weight; cross-table pairs inside the
/// chosen clusters are emitted with score 1 - EMD.
MatchList distribution_match(const Table& source, const Table& target,
                             const DistributionParams& params, const MatchLimits& limits = {});

}  // namespace matchbench
