#include "matchbench/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "matchbench/table.hpp"

namespace matchbench {

std::vector<RecallRow> recall_rows(const std::vector<ExperimentResult>& results) {
  std::map<std::pair<std::string, std::string>, std::vector<double>> groups;
  for (const ExperimentResult& r : results) {
    if (!r.ok) continue;
    groups[{std::string(to_string(r.scenario.kind)), r.config.method}].push_back(r.recall);
  }
  std::vector<RecallRow> rows;
  rows.reserve(groups.size());
  for (auto& [key, values] : groups) {
    rows.push_back({key.first, key.second, summarize(std::move(values))});
  }
  return rows;
}

std::vector<RuntimeRow> runtime_rows(const std::vector<ExperimentResult>& results) {
  std::map<std::string, std::pair<std::size_t, double>> totals;
  for (const ExperimentResult& r : results) {
    if (!r.ok) continue;
    auto& [jobs, seconds] = totals[r.config.method];
    ++jobs;
    seconds += r.runtime_seconds;
  }
  std::vector<RuntimeRow> rows;
  rows.reserve(totals.size());
  for (const auto& [method, total] : totals) {
    rows.push_back({method, total.first, total.second / static_cast<double>(total.first)});
  }
  return rows;
}

std::vector<SensitivityRow> sensitivity_rows(const std::vector<ExperimentResult>& results) {
  std::map<std::string, std::vector<const ExperimentResult*>> by_method;
  for (const ExperimentResult& r : results) {
    if (r.ok) by_method[r.config.method].push_back(&r);
  }

  std::vector<SensitivityRow> rows;
  for (const auto& [method, method_results] : by_method) {
    std::set<std::string> parameters;
    for (const ExperimentResult* r : method_results) {
      for (const auto& [name, value] : r->config.params) parameters.insert(name);
    }
    for (const std::string& parameter : parameters) {
      // One sweep = one pair with every other parameter pinned.
      std::map<std::string, std::map<double, double>> sweeps;
      for (const ExperimentResult* r : method_results) {
        const auto it = r->config.params.find(parameter);
        if (it == r->config.params.end()) continue;
        std::string key = r->pair_id;
        for (const auto& [name, value] : r->config.params) {
          if (name == parameter) continue;
          key += '\n' + name + '=' + format_double(value);
        }
        sweeps[key][it->second] = r->recall;
      }
      std::vector<std::vector<double>> series;
      for (const auto& [key, points] : sweeps) {
        if (points.size() < 2) continue;
        std::vector<double> s;
        s.reserve(points.size());
        for (const auto& [value, recall] : points) s.push_back(recall);
        series.push_back(std::move(s));
      }
      if (series.empty()) continue;
      rows.push_back({method, parameter, sensitivity(series)});
    }
  }
  return rows;
}

namespace {

void write_or_throw(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << content;
}

}  // namespace

void write_reports(const std::vector<ExperimentResult>& results,
                   const std::filesystem::path& out_dir) {
  if (results.empty()) throw std::invalid_argument("no results to report");
  std::filesystem::create_directories(out_dir);

  std::string recall_csv = "scenario,method,jobs,recall_min,recall_median,recall_max\n";
  for (const RecallRow& row : recall_rows(results)) {
    recall_csv += row.scenario_kind + ',' + row.method + ',' + std::to_string(row.recall.count) +
                  ',' + format_double(row.recall.min) + ',' + format_double(row.recall.median) +
                  ',' + format_double(row.recall.max) + '\n';
  }
  write_or_throw(out_dir / "recall_summary.csv", recall_csv);

  std::string sensitivity_csv = "method,parameter,sweeps,stddev_min,stddev_median,stddev_max\n";
  for (const SensitivityRow& row : sensitivity_rows(results)) {
    sensitivity_csv += row.method + ',' + row.parameter + ',' +
                       std::to_string(row.summary.series_count) + ',' +
                       format_double(row.summary.stddev_min) + ',' +
                       format_double(row.summary.stddev_median) + ',' +
                       format_double(row.summary.stddev_max) + '\n';
  }
  write_or_throw(out_dir / "sensitivity.csv", sensitivity_csv);

  std::string runtime_csv = "method,jobs,mean_runtime_seconds\n";
  for (const RuntimeRow& row : runtime_rows(results)) {
    runtime_csv += row.method + ',' + std::to_string(row.jobs) + ',' +
                   format_double(row.mean_runtime_seconds) + '\n';
  }
  write_or_throw(out_dir / "runtime.csv", runtime_csv);
}

}  // namespace matchbench
