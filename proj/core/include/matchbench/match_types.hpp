#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matchbench {

enum class Method { jaccard_levenshtein, similarity_flooding, cupid, distribution_based };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

/// Schema-level methods read only names and kinds; instance-level methods
/// read cell values.
bool is_instance_based(Method method);

struct MatchEntry {
  std::string source_id;
  std::string source_name;
  std::string target_id;
  std::string target_name;
  double score = 0.0;
};

/// Ranked correspondences between the columns of two tables. Scores are in
/// [0, 1]; order is score-descending with a deterministic tie-break on
/// (source name, target name, source id, target id).
struct MatchList {
  std::vector<MatchEntry> entries;

  /// Sorts, applies the tie-break, validates score range and
  /// (source, target) uniqueness.
  void finalize();
};

/// Method name plus numeric parameters. Boolean switches (e.g. cupid's
/// use_synonyms) are 0/1 parameters so a config stays one uniform shape.
struct MatcherConfig {
  std::string method;
  std::map<std::string, double> params;

  double param_or(std::string_view name, double fallback) const;
  /// "method|k=v;k=v" with shortest round-trip numbers; the stable identity
  /// used for job hashing and journals.
  std::string canonical_string() const;
};

struct MatchTimeout : std::runtime_error {
  MatchTimeout() : std::runtime_error("match deadline exceeded") {}
};

/// Cooperative execution limits. Matchers poll the deadline in their outer
/// loops and raise MatchTimeout, so a runaway job fails without taking the
/// whole suite down.
struct MatchLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw MatchTimeout();
  }
};

}  // namespace matchbench
