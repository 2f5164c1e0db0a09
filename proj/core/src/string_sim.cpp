#include "matchbench/string_sim.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace matchbench {

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();

  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;

  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      diag = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
    }
  }
  return row[b.size()];
}

std::size_t levenshtein_bounded(std::string_view a, std::string_view b, std::size_t cutoff) {
  if (a.size() < b.size()) std::swap(a, b);
  if (a.size() - b.size() > cutoff) return cutoff + 1;
  if (b.empty()) return a.size();
  if (cutoff >= a.size()) return levenshtein(a, b);

  // Band of half-width `cutoff` around the diagonal.
  const std::size_t big = std::numeric_limits<std::size_t>::max() / 2;
  std::vector<std::size_t> row(b.size() + 1, big);
  for (std::size_t j = 0; j <= std::min(b.size(), cutoff); ++j) row[j] = j;

  for (std::size_t i = 1; i <= a.size(); ++i) {
    const std::size_t lo = i > cutoff ? i - cutoff : 1;
    const std::size_t hi = std::min(b.size(), i + cutoff);
    if (lo > hi) return cutoff + 1;
    std::size_t diag = row[lo - 1];
    row[lo - 1] = (i <= cutoff && lo == 1) ? i : big;
    std::size_t best = row[lo - 1] == big ? big : row[lo - 1];
    for (std::size_t j = lo; j <= hi; ++j) {
      const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      diag = row[j];
      const std::size_t left = row[j - 1] == big ? big : row[j - 1] + 1;
      const std::size_t up = row[j] == big ? big : row[j] + 1;
      row[j] = std::min({up, left, sub});
      best = std::min(best, row[j]);
    }
    if (hi < b.size()) row[hi + 1] = big;
    if (best > cutoff) return cutoff + 1;
  }
  return row[b.size()] > cutoff ? cutoff + 1 : row[b.size()];
}

double normalized_levenshtein(std::string_view a, std::string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

double normalized_string_sim(std::string_view a, std::string_view b) {
  return 1.0 - normalized_levenshtein(a, b);
}

}  // namespace matchbench
