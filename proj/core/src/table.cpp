#include "matchbench/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace matchbench {

std::string_view to_string(DataKind kind) {
  switch (kind) {
    case DataKind::textual: return "textual";
    case DataKind::numeric: return "numeric";
    case DataKind::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<double> parse_number(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && (text[begin] == ' ' || text[begin] == '\t')) ++begin;
  while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
  if (begin == end) return std::nullopt;

  const char* first = text.data() + begin;
  const char* last = text.data() + end;
  if (*first == '+') ++first;  // from_chars rejects a leading plus
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

CellValue::CellValue(std::string raw_text) : raw(std::move(raw_text)) {
  number = parse_number(raw);
}

DataKind infer_kind(const std::vector<CellValue>& values, double numeric_threshold) {
  std::size_t non_empty = 0;
  std::size_t numeric = 0;
  for (const auto& v : values) {
    if (v.is_null()) continue;
    ++non_empty;
    if (v.number) ++numeric;
  }
  if (non_empty == 0) return DataKind::unknown;
  const double fraction = static_cast<double>(numeric) / static_cast<double>(non_empty);
  return fraction >= numeric_threshold ? DataKind::numeric : DataKind::textual;
}

Column::Column(std::string id, std::string name, std::vector<CellValue> values)
    : id_(std::move(id)),
      name_(std::move(name)),
      kind_(infer_kind(values)),
      values_(std::move(values)) {
  if (id_.empty()) throw std::invalid_argument("column id must not be empty");
}

Column Column::renamed(std::string new_name) const {
  Column copy = *this;
  copy.name_ = std::move(new_name);
  return copy;
}

Column Column::with_values(std::vector<CellValue> new_values) const {
  return Column(id_, name_, std::move(new_values));
}

Column Column::with_id(std::string new_id) const {
  Column copy = *this;
  copy.id_ = std::move(new_id);
  if (copy.id_.empty()) throw std::invalid_argument("column id must not be empty");
  return copy;
}

std::vector<std::string> Column::non_null_values() const {
  std::vector<std::string> out;
  out.reserve(values_.size());
  for (const auto& v : values_) {
    if (!v.is_null()) out.push_back(v.raw);
  }
  return out;
}

std::vector<double> Column::numeric_values() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& v : values_) {
    if (v.number) out.push_back(*v.number);
  }
  return out;
}

Table::Table(std::string name, std::vector<Column> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {
  if (!columns_.empty()) row_count_ = columns_.front().size();
  std::unordered_set<std::string_view> ids;
  for (const auto& c : columns_) {
    if (c.size() != row_count_) {
      throw std::invalid_argument("table '" + name_ + "': column '" + c.name() +
                                  "' has " + std::to_string(c.size()) +
                                  " cells, expected " + std::to_string(row_count_));
    }
    if (!ids.insert(c.id()).second) {
      throw std::invalid_argument("table '" + name_ + "': duplicate column id '" + c.id() + "'");
    }
  }
}

const Column& Table::column_at(std::size_t index) const {
  if (index >= columns_.size()) {
    throw std::out_of_range("column index " + std::to_string(index) + " out of range");
  }
  return columns_[index];
}

const Column* Table::find_column(std::string_view id) const {
  for (const auto& c : columns_) {
    if (c.id() == id) return &c;
  }
  return nullptr;
}

Table Table::renamed(std::string new_name) const {
  return Table(std::move(new_name), columns_);
}

namespace {

std::vector<std::vector<std::string>> parse_records(std::string_view text, char delimiter) {
  std::vector<std::vector<std::string>> records;
  if (text.size() >= 3 && text.substr(0, 3) == "\xef\xbb\xbf") text.remove_prefix(3);

  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  bool record_started = false;

  const auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  const auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
    record_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && !field_started) {
      in_quotes = true;
      field_started = true;
      record_started = true;
    } else if (c == delimiter) {
      end_field();
      record_started = true;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      end_record();
      ++i;
    } else if (c == '\n' || c == '\r') {
      end_record();
    } else {
      field.push_back(c);
      field_started = true;
      record_started = true;
    }
  }
  if (in_quotes) throw std::runtime_error("unterminated quoted field at end of input");
  if (record_started || field_started || !record.empty()) end_record();
  return records;
}

bool needs_quoting(const std::string& field, char delimiter) {
  return field.find_first_of(std::string{delimiter, '"', '\n', '\r'}) != std::string::npos;
}

void write_field(std::string& out, const std::string& field, char delimiter) {
  if (!needs_quoting(field, delimiter)) {
    out += field;
    return;
  }
  out.push_back('"');
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

}  // namespace

Table parse_csv(std::string_view text, std::string table_name, const CsvOptions& options) {
  const auto records = parse_records(text, options.delimiter);
  if (records.empty()) {
    if (options.has_header) {
      throw std::runtime_error("table '" + table_name + "': missing header record");
    }
    return Table(std::move(table_name), {});
  }

  std::vector<std::string> names;
  std::size_t first_data = 0;
  if (options.has_header) {
    names = records.front();
    first_data = 1;
  } else {
    names.resize(records.front().size());
    for (std::size_t i = 0; i < names.size(); ++i) names[i] = "field_" + std::to_string(i);
  }

  const std::size_t width = names.size();
  std::vector<std::vector<CellValue>> cells(width);
  for (std::size_t r = first_data; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != width) {
      throw std::runtime_error("table '" + table_name + "': data row " +
                               std::to_string(r - first_data + 1) + " has " +
                               std::to_string(rec.size()) + " fields, expected " +
                               std::to_string(width));
    }
    for (std::size_t ci = 0; ci < width; ++ci) cells[ci].emplace_back(CellValue(rec[ci]));
  }

  std::vector<Column> columns;
  columns.reserve(width);
  for (std::size_t ci = 0; ci < width; ++ci) {
    columns.emplace_back("c" + std::to_string(ci), names[ci], std::move(cells[ci]));
  }
  return Table(std::move(table_name), std::move(columns));
}

Table load_csv(const std::filesystem::path& file, const CsvOptions& options) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), file.stem().string(), options);
}

std::string to_csv(const Table& table, const CsvOptions& options) {
  std::string out;
  if (options.has_header) {
    for (std::size_t ci = 0; ci < table.column_count(); ++ci) {
      if (ci) out.push_back(options.delimiter);
      write_field(out, table.columns()[ci].name(), options.delimiter);
    }
    out.push_back('\n');
  }
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    for (std::size_t ci = 0; ci < table.column_count(); ++ci) {
      if (ci) out.push_back(options.delimiter);
      write_field(out, table.columns()[ci].values()[r].raw, options.delimiter);
    }
    out.push_back('\n');
  }
  return out;
}

void save_csv(const Table& table, const std::filesystem::path& file, const CsvOptions& options) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << to_csv(table, options);
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

}  // namespace matchbench
