#include "matchbench/jaccard_lev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "matchbench/string_sim.hpp"

namespace matchbench {

namespace {

std::vector<std::string> value_set(const Column& column) {
  std::vector<std::string> values = column.non_null_values();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool within_threshold(const std::string& a, const std::string& b, double threshold) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return true;
  // distance/longest <= threshold  <=>  distance <= floor(threshold*longest)
  const auto cutoff = static_cast<std::size_t>(threshold * static_cast<double>(longest) + 1e-9);
  return levenshtein_bounded(a, b, cutoff) <= cutoff;
}

}  // namespace

std::size_t fuzzy_intersection_size(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b, double threshold,
                                    const MatchLimits& limits) {
  std::vector<bool> used(b.size(), false);
  std::size_t count = 0;
  for (const std::string& va : a) {
    limits.check();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      if (within_threshold(va, b[j], threshold)) {
        used[j] = true;
        ++count;
        break;
      }
    }
  }
  return count;
}

MatchList jaccard_levenshtein_match(const Table& source, const Table& target, double threshold,
                                    const MatchLimits& limits) {
  if (threshold < 0.0 || threshold > 1.0) {
    throw std::invalid_argument("threshold must be in [0, 1]");
  }
  if (source.column_count() == 0 || target.column_count() == 0) {
    throw std::invalid_argument("both tables need at least one column");
  }

  std::vector<std::vector<std::string>> target_sets;
  target_sets.reserve(target.column_count());
  for (const Column& tc : target.columns()) target_sets.push_back(value_set(tc));

  MatchList out;
  out.entries.reserve(source.column_count() * target.column_count());
  for (const Column& sc : source.columns()) {
    const std::vector<std::string> sa = value_set(sc);
    for (std::size_t tj = 0; tj < target.column_count(); ++tj) {
      limits.check();
      const Column& tc = target.columns()[tj];
      const std::vector<std::string>& sb = target_sets[tj];
      double score = 0.0;
      if (!sa.empty() || !sb.empty()) {
        const std::size_t inter = fuzzy_intersection_size(sa, sb, threshold, limits);
        score = static_cast<double>(inter) /
                static_cast<double>(sa.size() + sb.size() - inter);
      }
      out.entries.push_back({sc.id(), sc.name(), tc.id(), tc.name(), score});
    }
  }
  out.finalize();
  return out;
}

}  // namespace matchbench
