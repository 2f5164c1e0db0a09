#pragma once

#include <cstddef>
#include <string_view>

namespace matchbench {

/// Classic edit distance (insert, delete, substitute, unit costs) over bytes.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// Banded edit distance. Returns the exact distance when it is <= cutoff,
/// otherwise any value > cutoff.
std::size_t levenshtein_bounded(std::string_view a, std::string_view b, std::size_t cutoff);

/// levenshtein(a, b) / max(|a|, |b|); two empty strings have distance 0.
double normalized_levenshtein(std::string_view a, std::string_view b);

/// 1 - normalized_levenshtein. Two empty strings are fully similar.
double normalized_string_sim(std::string_view a, std::string_view b);

}  // namespace matchbench
