#include "matchbench/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace matchbench {

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::unionable: return "unionable";
    case ScenarioKind::view_unionable: return "view_unionable";
    case ScenarioKind::joinable: return "joinable";
    case ScenarioKind::semantically_joinable: return "semantically_joinable";
  }
  return "unionable";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) {
  if (name == "unionable") return ScenarioKind::unionable;
  if (name == "view_unionable") return ScenarioKind::view_unionable;
  if (name == "joinable") return ScenarioKind::joinable;
  if (name == "semantically_joinable") return ScenarioKind::semantically_joinable;
  return std::nullopt;
}

ColumnOverlap ColumnOverlap::of(double fraction) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw std::invalid_argument("column overlap fraction must be in (0, 1]");
  }
  return {false, fraction};
}

void ScenarioSpec::validate() const {
  if (row_overlap < 0.0 || row_overlap > 1.0) {
    throw std::invalid_argument("row_overlap must be in [0, 1]");
  }
  switch (kind) {
    case ScenarioKind::unionable:
      if (column_overlap) {
        throw std::invalid_argument("unionable scenarios take no column overlap");
      }
      break;
    case ScenarioKind::view_unionable:
      if (!column_overlap) {
        throw std::invalid_argument("view_unionable scenarios need a column overlap");
      }
      if (row_overlap != 0.0) {
        throw std::invalid_argument("view_unionable scenarios have disjoint rows");
      }
      break;
    case ScenarioKind::joinable:
      if (!column_overlap) {
        throw std::invalid_argument("joinable scenarios need a column overlap");
      }
      if (instance_noise) {
        throw std::invalid_argument("joinable scenarios keep instances verbatim");
      }
      break;
    case ScenarioKind::semantically_joinable:
      if (!column_overlap) {
        throw std::invalid_argument("semantically_joinable scenarios need a column overlap");
      }
      if (!instance_noise) {
        throw std::invalid_argument("semantically_joinable scenarios perturb instances");
      }
      break;
  }
}

std::string pair_id_for(std::string_view table_name, const ScenarioSpec& spec) {
  std::string id(table_name);
  id += "__";
  id += to_string(spec.kind);
  if (spec.column_overlap) {
    id += "__co-";
    if (spec.column_overlap->exactly_one) {
      id += "x1";
    } else {
      id += std::to_string(static_cast<int>(std::llround(spec.column_overlap->fraction * 100)));
    }
  }
  id += "__ro-";
  id += std::to_string(static_cast<int>(std::llround(spec.row_overlap * 100)));
  id += "__";
  id += spec.schema_noise ? "ns" : "vs";
  id += "_";
  id += spec.instance_noise ? "ni" : "vi";
  id += "__s";
  id += std::to_string(spec.seed);
  return id;
}

GroundTruth::GroundTruth(std::vector<TruthPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool GroundTruth::contains(std::string_view source_id, std::string_view target_id) const {
  return std::binary_search(pairs_.begin(), pairs_.end(),
                            TruthPair{std::string(source_id), std::string(target_id)});
}

void GroundTruth::validate(const Table& source, const Table& target) const {
  std::set<std::string_view> seen_source;
  std::set<std::string_view> seen_target;
  for (const auto& p : pairs_) {
    if (!source.find_column(p.source_id)) {
      throw std::invalid_argument("truth references unknown source column id '" + p.source_id + "'");
    }
    if (!target.find_column(p.target_id)) {
      throw std::invalid_argument("truth references unknown target column id '" + p.target_id + "'");
    }
    if (!seen_source.insert(p.source_id).second || !seen_target.insert(p.target_id).second) {
      throw std::invalid_argument("truth mapping is not one-to-one at '" + p.source_id + "'");
    }
  }
}

}  // namespace matchbench
