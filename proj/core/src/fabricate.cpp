#include "matchbench/fabricate.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json_util.hpp"

namespace matchbench {

namespace {

constexpr std::uint64_t kRowSalt = 0xa11ce5;
constexpr std::uint64_t kColumnSalt = 0xc01a5e;
constexpr std::uint64_t kSchemaSalt = 0x5c4e3a;
constexpr std::uint64_t kCellSalt = 0xce1175;

struct RowPartition {
  std::vector<std::size_t> rows_a;
  std::vector<std::size_t> rows_b;
  std::size_t shared = 0;
};

RowPartition partition_rows(std::size_t n, double overlap, Rng& rng) {
  const auto shared = static_cast<std::size_t>(std::llround(overlap * static_cast<double>(n)));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);

  const std::size_t rest = n - shared;
  const std::size_t a_extra = rest - rest / 2;

  RowPartition part;
  part.shared = shared;
  part.rows_a.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(shared + a_extra));
  part.rows_b.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(shared));
  part.rows_b.insert(part.rows_b.end(), perm.begin() + static_cast<std::ptrdiff_t>(shared + a_extra),
                     perm.end());
  std::sort(part.rows_a.begin(), part.rows_a.end());
  std::sort(part.rows_b.begin(), part.rows_b.end());
  return part;
}

struct ColumnPartition {
  std::vector<std::size_t> cols_a;
  std::vector<std::size_t> cols_b;
  std::vector<std::size_t> shared;
};

ColumnPartition partition_columns(std::size_t n, const ColumnOverlap& overlap, Rng& rng) {
  std::size_t shared = 1;
  if (!overlap.exactly_one) {
    shared = static_cast<std::size_t>(std::llround(overlap.fraction * static_cast<double>(n)));
    shared = std::clamp<std::size_t>(shared, 1, n);
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);

  const std::size_t rest = n - shared;
  const std::size_t a_extra = rest - rest / 2;

  ColumnPartition part;
  part.shared.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(shared));
  part.cols_a = part.shared;
  part.cols_a.insert(part.cols_a.end(), perm.begin() + static_cast<std::ptrdiff_t>(shared),
                     perm.begin() + static_cast<std::ptrdiff_t>(shared + a_extra));
  part.cols_b = part.shared;
  part.cols_b.insert(part.cols_b.end(), perm.begin() + static_cast<std::ptrdiff_t>(shared + a_extra),
                     perm.end());
  std::sort(part.shared.begin(), part.shared.end());
  std::sort(part.cols_a.begin(), part.cols_a.end());
  std::sort(part.cols_b.begin(), part.cols_b.end());
  return part;
}

Table project(const Table& table, std::string name, const std::vector<std::size_t>& col_indices,
              const std::vector<std::size_t>* row_indices) {
  std::vector<Column> columns;
  columns.reserve(col_indices.size());
  for (const std::size_t ci : col_indices) {
    const Column& src = table.column_at(ci);
    if (row_indices == nullptr) {
      columns.push_back(src);
      continue;
    }
    std::vector<CellValue> cells;
    cells.reserve(row_indices->size());
    for (const std::size_t r : *row_indices) cells.push_back(src.values()[r]);
    columns.push_back(src.with_values(std::move(cells)));
  }
  return Table(std::move(name), std::move(columns));
}

/// QWERTY neighbors of each lowercase letter.
const std::map<char, std::string>& qwerty_neighbors() {
  static const std::map<char, std::string> table = {
      {'q', "wa"},     {'w', "qeas"},   {'e', "wrds"},  {'r', "etdf"},  {'t', "ryfg"},
      {'y', "tugh"},   {'u', "yihj"},   {'i', "uojk"},  {'o', "ipkl"},  {'p', "ol"},
      {'a', "qwsz"},   {'s', "awedxz"}, {'d', "serfcx"}, {'f', "drtgvc"}, {'g', "ftyhbv"},
      {'h', "gyujnb"}, {'j', "huikmn"}, {'k', "jiolm"}, {'l', "kop"},   {'z', "asx"},
      {'x', "zsdc"},   {'c', "xdfv"},   {'v', "cfgb"},  {'b', "vghn"},  {'n', "bhjm"},
      {'m', "njk"},
  };
  return table;
}

std::string typo(const std::string& text, Rng& rng) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    if (qwerty_neighbors().count(lower)) positions.push_back(i);
  }
  if (positions.empty()) return text;
  const std::size_t pos = positions[rng.below(positions.size())];
  const char original = text[pos];
  const bool upper = std::isupper(static_cast<unsigned char>(original)) != 0;
  const std::string& neighbors =
      qwerty_neighbors().at(static_cast<char>(std::tolower(static_cast<unsigned char>(original))));
  char replacement = neighbors[rng.below(neighbors.size())];
  if (upper) replacement = static_cast<char>(std::toupper(static_cast<unsigned char>(replacement)));
  std::string out = text;
  out[pos] = replacement;
  return out;
}

double sample_stddev(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  double mean = 0.0;
  for (const double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

bool is_word_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool starts_word(std::string_view name, std::size_t i) {
  if (i == 0) return true;
  const char prev = name[i - 1];
  const char cur = name[i];
  if (!is_word_letter(prev)) return true;
  if (std::isupper(static_cast<unsigned char>(cur)) && std::islower(static_cast<unsigned char>(prev))) {
    return true;
  }
  return false;
}

bool is_vowel(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return true;
    default: return false;
  }
}

}  // namespace

HorizontalSplit split_horizontal(const Table& table, double row_overlap, std::uint64_t seed) {
  if (row_overlap < 0.0 || row_overlap > 1.0) {
    throw std::invalid_argument("row overlap must be in [0, 1]");
  }
  if (table.row_count() < 2) {
    throw std::invalid_argument("horizontal split needs at least 2 rows");
  }
  Rng rng(Rng::mix(seed, kRowSalt));
  const RowPartition part = partition_rows(table.row_count(), row_overlap, rng);

  std::vector<std::size_t> all_cols(table.column_count());
  for (std::size_t i = 0; i < all_cols.size(); ++i) all_cols[i] = i;

  HorizontalSplit split{
      project(table, table.name() + "_a", all_cols, &part.rows_a),
      project(table, table.name() + "_b", all_cols, &part.rows_b),
      part.shared,
  };
  return split;
}

VerticalSplit split_vertical(const Table& table, const ColumnOverlap& overlap, std::uint64_t seed) {
  if (table.column_count() < 3) {
    throw std::invalid_argument("vertical split needs at least 3 columns");
  }
  Rng rng(Rng::mix(seed, kColumnSalt));
  const ColumnPartition part = partition_columns(table.column_count(), overlap, rng);

  VerticalSplit split{
      project(table, table.name() + "_a", part.cols_a, nullptr),
      project(table, table.name() + "_b", part.cols_b, nullptr),
      {},
  };
  for (const std::size_t ci : part.shared) split.shared_ids.push_back(table.column_at(ci).id());
  return split;
}

Column add_instance_noise(const Column& column, std::uint64_t seed, const NoiseParams& params) {
  Rng rng(seed);
  const DataKind kind = column.kind();
  const double sigma =
      kind == DataKind::numeric ? params.numeric_noise_scale * sample_stddev(column.numeric_values())
                                : 0.0;

  std::vector<CellValue> cells = column.values();
  for (auto& cell : cells) {
    if (cell.is_null()) continue;
    if (rng.uniform01() >= params.typo_cell_rate) continue;
    if (kind == DataKind::numeric) {
      if (!cell.number || sigma <= 0.0) continue;
      cell = CellValue(format_double(*cell.number + rng.normal() * sigma));
    } else {
      cell = CellValue(typo(cell.raw, rng));
    }
  }
  return column.with_values(std::move(cells));
}

std::string drop_vowels(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (is_word_letter(c) && is_vowel(c) && !starts_word(name, i)) continue;
    out.push_back(c);
  }
  return out;
}

std::string abbreviate(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  std::size_t token_len = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (!is_word_letter(c)) {
      out.push_back(c);
      token_len = 0;
      continue;
    }
    if (starts_word(name, i)) token_len = 0;
    if (token_len < 4) out.push_back(c);
    ++token_len;
  }
  return out;
}

std::string prefix_with_table(std::string_view name, std::string_view table_name) {
  std::string out(table_name);
  out += "_";
  out += name;
  return out;
}

std::string add_schema_noise(std::string_view name, std::string_view table_name, Rng& rng) {
  const std::uint64_t combo = 1 + rng.below(7);  // non-empty subset of the three rules
  std::string out(name);
  if (combo & 1) out = abbreviate(out);
  if (combo & 2) out = drop_vowels(out);
  if (combo & 4) out = prefix_with_table(out, table_name);
  // Short names can pass through the character rules untouched; a noisy
  // schema must actually differ, so fall back to the prefix rule.
  if (out == name) out = prefix_with_table(out, table_name);
  return out;
}

namespace {

std::optional<std::string> precondition_error(const Table& table, const ScenarioSpec& spec) {
  if (spec.kind != ScenarioKind::unionable && table.column_count() < 3) {
    return "needs at least 3 columns for a vertical split, table has " +
           std::to_string(table.column_count());
  }
  if (spec.row_overlap < 1.0 && table.row_count() < 2) {
    return "needs at least 2 rows for a horizontal split, table has " +
           std::to_string(table.row_count());
  }
  return std::nullopt;
}

}  // namespace

DatasetPair fabricate(const Table& table, const ScenarioSpec& spec, const NoiseParams& noise) {
  spec.validate();
  if (const auto err = precondition_error(table, spec)) throw std::invalid_argument(*err);

  // Column selection.
  std::vector<std::size_t> cols_a;
  std::vector<std::size_t> cols_b;
  std::vector<std::size_t> shared_cols;
  if (spec.kind == ScenarioKind::unionable) {
    cols_a.resize(table.column_count());
    for (std::size_t i = 0; i < cols_a.size(); ++i) cols_a[i] = i;
    cols_b = cols_a;
    shared_cols = cols_a;
  } else {
    Rng col_rng(Rng::mix(spec.seed, kColumnSalt));
    const ColumnPartition part = partition_columns(table.column_count(), *spec.column_overlap, col_rng);
    cols_a = part.cols_a;
    cols_b = part.cols_b;
    shared_cols = part.shared;
  }

  // Row selection; overlap 1.0 keeps every row on both sides.
  const std::vector<std::size_t>* rows_a = nullptr;
  const std::vector<std::size_t>* rows_b = nullptr;
  RowPartition row_part;
  if (spec.row_overlap < 1.0) {
    Rng row_rng(Rng::mix(spec.seed, kRowSalt));
    row_part = partition_rows(table.row_count(), spec.row_overlap, row_rng);
    rows_a = &row_part.rows_a;
    rows_b = &row_part.rows_b;
  }

  Table source = project(table, table.name() + "_a", cols_a, rows_a);
  Table target = project(table, table.name() + "_b", cols_b, rows_b);

  // Noise lands on the target side only; the source keeps the original text.
  if (spec.instance_noise) {
    std::vector<Column> noisy;
    noisy.reserve(target.column_count());
    for (const Column& c : target.columns()) {
      noisy.push_back(
          add_instance_noise(c, Rng::mix(spec.seed, kCellSalt ^ Rng::hash64(c.id())), noise));
    }
    target = Table(target.name(), std::move(noisy));
  }
  if (spec.schema_noise) {
    Rng schema_rng(Rng::mix(spec.seed, kSchemaSalt));
    std::vector<Column> renamed;
    renamed.reserve(target.column_count());
    for (const Column& c : target.columns()) {
      renamed.push_back(c.renamed(add_schema_noise(c.name(), target.name(), schema_rng)));
    }
    target = Table(target.name(), std::move(renamed));
  }

  // Renumber ids positionally per side so that writing the pair to disk and
  // loading it back reproduces this exact object. The truth is rewritten
  // through the same mapping, so the correspondence is untouched.
  std::map<std::string, std::string> source_ids;
  std::map<std::string, std::string> target_ids;
  const auto renumber = [](const Table& t, std::map<std::string, std::string>& mapping) {
    std::vector<Column> columns;
    columns.reserve(t.column_count());
    for (std::size_t i = 0; i < t.column_count(); ++i) {
      const Column& c = t.column_at(i);
      mapping[c.id()] = "c" + std::to_string(i);
      columns.push_back(c.with_id("c" + std::to_string(i)));
    }
    return Table(t.name(), std::move(columns));
  };
  Table final_source = renumber(source, source_ids);
  Table final_target = renumber(target, target_ids);

  std::vector<TruthPair> truth_pairs;
  truth_pairs.reserve(shared_cols.size());
  for (const std::size_t ci : shared_cols) {
    const std::string& original_id = table.column_at(ci).id();
    truth_pairs.push_back({source_ids.at(original_id), target_ids.at(original_id)});
  }

  DatasetPair pair{
      pair_id_for(table.name(), spec), spec,
      std::move(final_source),         std::move(final_target),
      GroundTruth(std::move(truth_pairs)),
  };
  pair.truth.validate(pair.source, pair.target);
  return pair;
}

std::vector<ScenarioSpec> suite_scenarios(std::uint64_t seed) {
  std::vector<ScenarioSpec> specs;
  specs.reserve(56);
  const std::array<std::pair<bool, bool>, 4> noise_combos = {
      std::pair{false, false}, {true, false}, {false, true}, {true, true}};

  std::uint64_t counter = 0;
  const auto derived = [&] { return Rng::mix(seed, 0x9000 + counter++); };

  for (const double ro : {0.0, 0.5, 1.0}) {
    for (const auto& [ns, ni] : noise_combos) {
      specs.push_back({ScenarioKind::unionable, ro, std::nullopt, ns, ni, derived()});
    }
  }
  for (const double co : {0.3, 0.5, 0.7}) {
    for (const auto& [ns, ni] : noise_combos) {
      specs.push_back({ScenarioKind::view_unionable, 0.0, ColumnOverlap::of(co), ns, ni, derived()});
    }
  }
  const std::array<ColumnOverlap, 4> join_overlaps = {
      ColumnOverlap::one(), ColumnOverlap::of(0.3), ColumnOverlap::of(0.5), ColumnOverlap::of(0.7)};
  for (const bool noisy_instances : {false, true}) {
    const ScenarioKind kind =
        noisy_instances ? ScenarioKind::semantically_joinable : ScenarioKind::joinable;
    for (const auto& co : join_overlaps) {
      for (const double ro : {1.0, 0.5}) {
        for (const bool ns : {false, true}) {
          specs.push_back({kind, ro, co, ns, noisy_instances, derived()});
        }
      }
    }
  }
  return specs;
}

SuiteFabrication fabricate_suite(const Table& table, std::uint64_t seed, const NoiseParams& noise) {
  SuiteFabrication out;
  for (const ScenarioSpec& spec : suite_scenarios(seed)) {
    if (const auto err = precondition_error(table, spec)) {
      out.skipped.push_back(pair_id_for(table.name(), spec) + ": " + *err);
      continue;
    }
    out.pairs.push_back(fabricate(table, spec, noise));
  }
  return out;
}

namespace {

detail::ordered_json truth_to_json(const DatasetPair& pair) {
  detail::ordered_json j;
  j["pair_id"] = pair.pair_id;
  j["scenario"] = detail::scenario_to_json(pair.scenario);
  auto matches = detail::ordered_json::array();
  for (const TruthPair& t : pair.truth.pairs()) {
    detail::ordered_json m;
    m["source_column"] = pair.source.find_column(t.source_id)->name();
    m["source_id"] = t.source_id;
    m["target_column"] = pair.target.find_column(t.target_id)->name();
    m["target_id"] = t.target_id;
    matches.push_back(std::move(m));
  }
  j["matches"] = std::move(matches);
  return j;
}

}  // namespace

std::filesystem::path write_pair(const DatasetPair& pair, const std::filesystem::path& dir) {
  const std::filesystem::path pair_dir = dir / pair.pair_id;
  std::filesystem::create_directories(pair_dir);
  save_csv(pair.source, pair_dir / (pair.source.name() + ".csv"));
  save_csv(pair.target, pair_dir / (pair.target.name() + ".csv"));
  std::ofstream out(pair_dir / "ground_truth.json", std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write ground truth in " + pair_dir.string());
  out << truth_to_json(pair).dump(2) << '\n';
  return pair_dir;
}

std::filesystem::path write_pairs_with_manifest(const std::vector<DatasetPair>& pairs,
                                                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  detail::ordered_json manifest;
  manifest["pair_count"] = pairs.size();
  auto list = detail::ordered_json::array();
  for (const DatasetPair& pair : pairs) {
    write_pair(pair, dir);
    detail::ordered_json entry;
    entry["pair_id"] = pair.pair_id;
    entry["scenario"] = detail::scenario_to_json(pair.scenario);
    entry["source_csv"] = pair.pair_id + "/" + pair.source.name() + ".csv";
    entry["target_csv"] = pair.pair_id + "/" + pair.target.name() + ".csv";
    entry["ground_truth"] = pair.pair_id + "/ground_truth.json";
    list.push_back(std::move(entry));
  }
  manifest["pairs"] = std::move(list);
  const std::filesystem::path manifest_path = dir / "manifest.json";
  std::ofstream out(manifest_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + manifest_path.string());
  out << manifest.dump(2) << '\n';
  return manifest_path;
}

namespace {

detail::ordered_json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  detail::ordered_json j;
  in >> j;
  return j;
}

}  // namespace

GroundTruth load_truth(const std::filesystem::path& file) {
  const auto j = read_json_file(file);
  std::vector<TruthPair> pairs;
  for (const auto& m : j.at("matches")) {
    pairs.push_back({m.at("source_id").get<std::string>(), m.at("target_id").get<std::string>()});
  }
  return GroundTruth(std::move(pairs));
}

ScenarioSpec load_truth_scenario(const std::filesystem::path& file) {
  return detail::scenario_from_json(read_json_file(file).at("scenario"));
}

}  // namespace matchbench
