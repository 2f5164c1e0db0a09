#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "matchbench/rng.hpp"
#include "matchbench/scenario.hpp"
#include "matchbench/table.hpp"

namespace matchbench {

struct NoiseParams {
  /// Per-cell perturbation probability (both kinds). 0 disables cell noise.
  double typo_cell_rate = 0.25;
  /// Numeric perturbation scale: sigma = scale * sample std-dev of the column.
  double numeric_noise_scale = 0.1;
};

/// Result of a horizontal split: two tables with all columns, sharing
/// `shared_rows` rows.
struct HorizontalSplit {
  Table a;
  Table b;
  std::size_t shared_rows = 0;
};

/// Result of a vertical split: two tables with all rows, sharing
/// `shared_ids` columns (ids preserved).
struct VerticalSplit {
  Table a;
  Table b;
  std::vector<std::string> shared_ids;
};

/// Splits rows into two overlapping samples. shared = round(overlap * rows);
/// the remaining rows go half to each side (the first side gets the odd one).
/// Requires at least 2 rows.
HorizontalSplit split_horizontal(const Table& table, double row_overlap, std::uint64_t seed);

/// Splits columns into two overlapping groups, keeping every row. The shared
/// group is a seeded draw of round(overlap * columns) columns (at least 1),
/// or exactly one column. Requires at least 3 columns.
VerticalSplit split_vertical(const Table& table, const ColumnOverlap& overlap, std::uint64_t seed);

/// Perturbs cells in place: with probability `typo_cell_rate` each, textual
/// cells get one character replaced by a QWERTY-adjacent key and numeric
/// cells get Gaussian noise scaled to the column spread. Id and name are
/// preserved.
Column add_instance_noise(const Column& column, std::uint64_t seed, const NoiseParams& params = {});

/// Name transformation rules used by schema noise.
std::string drop_vowels(std::string_view name);
std::string abbreviate(std::string_view name);
std::string prefix_with_table(std::string_view name, std::string_view table_name);

/// Applies a seeded non-empty combination of the three rules above
/// (abbreviate, then drop vowels, then prefix).
std::string add_schema_noise(std::string_view name, std::string_view table_name, Rng& rng);

/// Builds one related pair with ground truth from a single table. The target
/// side carries whatever noise the scenario asks for. Output column ids are
/// positional per side ("c0", "c1", ...), so a pair written to disk and
/// reloaded is identical to the in-memory result.
DatasetPair fabricate(const Table& table, const ScenarioSpec& spec, const NoiseParams& noise = {});

/// The canonical scenario grid: 12 unionable, 12 view-unionable, 16 joinable
/// and 16 semantically-joinable specs, each with a seed derived from `seed`.
std::vector<ScenarioSpec> suite_scenarios(std::uint64_t seed);

struct SuiteFabrication {
  std::vector<DatasetPair> pairs;
  /// One human-readable line per scenario skipped because the table cannot
  /// satisfy its preconditions.
  std::vector<std::string> skipped;
};

SuiteFabrication fabricate_suite(const Table& table, std::uint64_t seed,
                                 const NoiseParams& noise = {});

/// On-disk layout: <dir>/<pair_id>/ holding one CSV per side (named after
/// the side's table) and ground_truth.json. Returns the pair directory.
std::filesystem::path write_pair(const DatasetPair& pair, const std::filesystem::path& dir);

/// Writes every pair plus <dir>/manifest.json listing them.
std::filesystem::path write_pairs_with_manifest(const std::vector<DatasetPair>& pairs,
                                                const std::filesystem::path& dir);

/// Reads a ground-truth file written by write_pair.
GroundTruth load_truth(const std::filesystem::path& file);
ScenarioSpec load_truth_scenario(const std::filesystem::path& file);

}  // namespace matchbench
