#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matchbench {

enum class DataKind { textual, numeric, unknown };

std::string_view to_string(DataKind kind);

/// One cell. The raw text is authoritative; `number` is set iff the raw text
/// parses as a finite number in full. An empty raw string means null.
struct CellValue {
  std::string raw;
  std::optional<double> number;

  CellValue() = default;
  explicit CellValue(std::string raw_text);

  bool is_null() const { return raw.empty(); }
};

/// Full-string numeric parse (optional sign, decimals, exponent), surrounding
/// ASCII whitespace ignored. Non-finite results are rejected.
std::optional<double> parse_number(std::string_view text);

/// Shortest round-trip decimal rendering of a double.
std::string format_double(double value);

/// A column is numeric when at least this fraction of its non-empty cells
/// parses as a number.
inline constexpr double kNumericKindThreshold = 0.9;

DataKind infer_kind(const std::vector<CellValue>& values,
                    double numeric_threshold = kNumericKindThreshold);

/// Immutable named column. The id is a stable handle: fabrication steps that
/// rename a column or rewrite its cells keep the id, which is how ground
/// truth stays valid while names drift.
class Column {
 public:
  Column(std::string id, std::string name, std::vector<CellValue> values);

  const std::string& id() const { return id_; }
  const std::string& name() const { return name_; }
  DataKind kind() const { return kind_; }
  const std::vector<CellValue>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  Column renamed(std::string new_name) const;
  Column with_values(std::vector<CellValue> new_values) const;
  Column with_id(std::string new_id) const;

  /// Non-null raw strings, in row order.
  std::vector<std::string> non_null_values() const;
  /// Parsed numbers of all non-null numeric cells, in row order.
  std::vector<double> numeric_values() const;

 private:
  std::string id_;
  std::string name_;
  DataKind kind_;
  std::vector<CellValue> values_;
};

class Table {
 public:
  Table(std::string name, std::vector<Column> columns);

  const std::string& name() const { return name_; }
  const std::vector<Column>& columns() const { return columns_; }
  std::size_t column_count() const { return columns_.size(); }
  std::size_t row_count() const { return row_count_; }

  const Column& column_at(std::size_t index) const;
  const Column* find_column(std::string_view id) const;

  Table renamed(std::string new_name) const;

 private:
  std::string name_;
  std::vector<Column> columns_;
  std::size_t row_count_ = 0;
};

struct CsvOptions {
  char delimiter = ',';
  bool has_header = true;
};

/// RFC 4180 reader: quoted fields, doubled-quote escapes, embedded
/// delimiters and newlines, CRLF or LF records, optional UTF-8 BOM.
/// Ragged records are a hard error naming the offending record.
Table parse_csv(std::string_view text, std::string table_name,
                const CsvOptions& options = {});
Table load_csv(const std::filesystem::path& file, const CsvOptions& options = {});

std::string to_csv(const Table& table, const CsvOptions& options = {});
void save_csv(const Table& table, const std::filesystem::path& file,
              const CsvOptions& options = {});

}  // namespace matchbench
