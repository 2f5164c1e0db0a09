#pragma once

#include <cstdint>

#include "matchbench/table.hpp"

namespace matchbench {

/// A 10-column person table (5 numeric, 5 textual) for demos and tests.
/// Columns draw from fixed value pools of deliberately different sizes, so
/// any two different columns are far apart for every matcher here: value
/// pools are pairwise disjoint, distinct-value counts sit in separate tiers,
/// and numeric ranges do not overlap. Each pool entry recurs about equally
/// often, which keeps those properties stable under row subsetting.
Table make_demo_table(std::size_t rows, std::uint64_t seed);

}  // namespace matchbench
