#pragma once

// Internal JSON helpers shared by the fabricator and the suite runner. Kept
// out of the public headers so installed consumers do not inherit a JSON
// library dependency.

#include <nlohmann/json.hpp>

#include "matchbench/scenario.hpp"

namespace matchbench::detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json scenario_to_json(const ScenarioSpec& spec) {
  ordered_json j;
  j["kind"] = std::string(to_string(spec.kind));
  j["row_overlap"] = spec.row_overlap;
  if (spec.column_overlap) {
    if (spec.column_overlap->exactly_one) {
      j["column_overlap"] = "exactly-one";
    } else {
      j["column_overlap"] = spec.column_overlap->fraction;
    }
  } else {
    j["column_overlap"] = nullptr;
  }
  j["schema_noise"] = spec.schema_noise;
  j["instance_noise"] = spec.instance_noise;
  j["seed"] = spec.seed;
  return j;
}

inline ScenarioSpec scenario_from_json(const ordered_json& j) {
  ScenarioSpec spec;
  const auto kind = parse_scenario_kind(j.at("kind").get<std::string>());
  if (!kind) throw std::runtime_error("unknown scenario kind in JSON");
  spec.kind = *kind;
  spec.row_overlap = j.at("row_overlap").get<double>();
  const auto& co = j.at("column_overlap");
  if (co.is_string()) {
    if (co.get<std::string>() != "exactly-one") {
      throw std::runtime_error("unknown column_overlap literal");
    }
    spec.column_overlap = ColumnOverlap::one();
  } else if (co.is_number()) {
    spec.column_overlap = ColumnOverlap::of(co.get<double>());
  }
  spec.schema_noise = j.at("schema_noise").get<bool>();
  spec.instance_noise = j.at("instance_noise").get<bool>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  return spec;
}

}  // namespace matchbench::detail
