#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchbench/table.hpp"

namespace matchbench {

enum class ScenarioKind { unionable, view_unionable, joinable, semantically_joinable };

std::string_view to_string(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario_kind(std::string_view name);

/// Column overlap for vertical splits: either a fraction of the columns or
/// the literal single-shared-column case used by join scenarios.
struct ColumnOverlap {
  bool exactly_one = false;
  double fraction = 0.0;

  static ColumnOverlap one() { return {true, 0.0}; }
  static ColumnOverlap of(double fraction);

  bool operator==(const ColumnOverlap&) const = default;
};

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::unionable;
  /// Fraction of rows shared by the two sides. 1.0 means both keep all rows
  /// (no horizontal split).
  double row_overlap = 1.0;
  /// Present for vertically split scenarios only.
  std::optional<ColumnOverlap> column_overlap;
  bool schema_noise = false;
  bool instance_noise = false;
  std::uint64_t seed = 0;

  /// Enforces cross-field rules (view-unionable rows are disjoint, joinable
  /// implies verbatim instances, semantically-joinable implies noisy ones).
  void validate() const;
};

/// Short deterministic identifier, e.g. "demo__joinable__co-50__ro-100__ns_vi__s7".
std::string pair_id_for(std::string_view table_name, const ScenarioSpec& spec);

struct TruthPair {
  std::string source_id;
  std::string target_id;

  bool operator==(const TruthPair&) const = default;
  auto operator<=>(const TruthPair&) const = default;
};

/// The correct column correspondences of a fabricated pair, tracked by
/// column id so renaming never invalidates them.
class GroundTruth {
 public:
  GroundTruth() = default;
  explicit GroundTruth(std::vector<TruthPair> pairs);

  const std::vector<TruthPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(std::string_view source_id, std::string_view target_id) const;

  /// Every id must resolve in its table; the mapping must be one-to-one.
  void validate(const Table& source, const Table& target) const;

 private:
  std::vector<TruthPair> pairs_;  // sorted, unique
};

struct DatasetPair {
  std::string pair_id;
  ScenarioSpec scenario;
  Table source;
  Table target;
  GroundTruth truth;
};

}  // namespace matchbench
