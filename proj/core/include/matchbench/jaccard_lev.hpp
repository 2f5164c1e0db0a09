#pragma once

#include <string>
#include <vector>

#include "matchbench/match_types.hpp"
#include "matchbench/table.hpp"

namespace matchbench {

/// Greedy fuzzy set intersection: |{a in A : a pairs with an unused b in B,
/// normalized edit distance <= threshold}|. Both inputs must be sorted and
/// deduplicated; pairing runs in sorted order, each element of B is used at
/// most once.
std::size_t fuzzy_intersection_size(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b, double threshold,
                                    const MatchLimits& limits = {});

/// Scores every cross-table column pair with the fuzzy Jaccard coefficient
/// of the deduplicated non-null value sets: I / (|A| + |B| - I). A pair of
/// empty value sets scores 0 (no evidence).
MatchList jaccard_levenshtein_match(const Table& source, const Table& target, double threshold,
                                    const MatchLimits& limits = {});

}  // namespace matchbench
