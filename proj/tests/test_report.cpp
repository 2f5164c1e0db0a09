#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchbench/report.hpp"

using namespace matchbench;
namespace fs = std::filesystem;

namespace {

ExperimentResult result(const std::string& pair_id, ScenarioKind kind, const std::string& method,
                        std::map<std::string, double> params, double recall,
                        double runtime = 0.0, bool ok = true) {
  ExperimentResult r;
  r.job_id = pair_id + "/" + method;
  for (const auto& [k, v] : params) r.job_id += "/" + k + "=" + std::to_string(v);
  r.pair_id = pair_id;
  r.scenario.kind = kind;
  r.config.method = method;
  r.config.params = std::move(params);
  r.ok = ok;
  r.recall = recall;
  r.truth_size = 4;
  r.runtime_seconds = runtime;
  return r;
}

const SensitivityRow* find_row(const std::vector<SensitivityRow>& rows, const std::string& method,
                               const std::string& parameter) {
  for (const auto& row : rows) {
    if (row.method == method && row.parameter == parameter) return &row;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("recall rows group successful jobs by scenario and method") {
  const std::vector<ExperimentResult> results = {
      result("p1", ScenarioKind::unionable, "jaccard-levenshtein", {{"threshold", 0.4}}, 0.2),
      result("p1", ScenarioKind::unionable, "jaccard-levenshtein", {{"threshold", 0.8}}, 0.8),
      result("p2", ScenarioKind::joinable, "jaccard-levenshtein", {{"threshold", 0.4}}, 0.5),
      result("p1", ScenarioKind::unionable, "cupid", {}, 1.0),
      result("p3", ScenarioKind::unionable, "jaccard-levenshtein", {{"threshold", 0.4}}, 0.0,
             0.0, false),
  };

  const std::vector<RecallRow> rows = recall_rows(results);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].scenario_kind == "joinable");
  CHECK(rows[0].method == "jaccard-levenshtein");
  CHECK(rows[0].recall.count == 1);
  CHECK(rows[1].scenario_kind == "unionable");
  CHECK(rows[1].method == "cupid");
  CHECK(rows[2].method == "jaccard-levenshtein");
  CHECK(rows[2].recall.count == 2);  // the failed job is not aggregated
  CHECK(rows[2].recall.min == 0.2);
  CHECK(rows[2].recall.median == 0.2);
  CHECK(rows[2].recall.max == 0.8);
}

TEST_CASE("runtime rows average per method") {
  const std::vector<ExperimentResult> results = {
      result("p1", ScenarioKind::unionable, "cupid", {}, 1.0, 1.0),
      result("p2", ScenarioKind::unionable, "cupid", {}, 1.0, 3.0),
      result("p1", ScenarioKind::unionable, "similarity-flooding", {}, 1.0, 5.0),
      result("p3", ScenarioKind::unionable, "cupid", {}, 0.0, 99.0, false),
  };

  const std::vector<RuntimeRow> rows = runtime_rows(results);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].method == "cupid");
  CHECK(rows[0].jobs == 2);
  CHECK(rows[0].mean_runtime_seconds == doctest::Approx(2.0));
  CHECK(rows[1].method == "similarity-flooding");
  CHECK(rows[1].jobs == 1);
  CHECK(rows[1].mean_runtime_seconds == doctest::Approx(5.0));
}

TEST_CASE("sensitivity rows sweep one knob with the rest pinned") {
  const std::vector<ExperimentResult> results = {
      // pair p1: recall jumps as the threshold moves
      result("p1", ScenarioKind::unionable, "jaccard-levenshtein", {{"threshold", 0.4}}, 0.0),
      result("p1", ScenarioKind::unionable, "jaccard-levenshtein", {{"threshold", 0.5}}, 1.0),
      // pair p2: flat
      result("p2", ScenarioKind::unionable, "jaccard-levenshtein", {{"threshold", 0.4}}, 1.0),
      result("p2", ScenarioKind::unionable, "jaccard-levenshtein", {{"threshold", 0.5}}, 1.0),
      // cupid: th_accept sweeps within one leaf_w_struct setting
      result("p1", ScenarioKind::unionable, "cupid",
             {{"leaf_w_struct", 0.0}, {"th_accept", 0.3}}, 0.0),
      result("p1", ScenarioKind::unionable, "cupid",
             {{"leaf_w_struct", 0.0}, {"th_accept", 0.8}}, 1.0),
      result("p1", ScenarioKind::unionable, "cupid",
             {{"leaf_w_struct", 0.2}, {"th_accept", 0.3}}, 1.0),
  };

  const std::vector<SensitivityRow> rows = sensitivity_rows(results);

  const SensitivityRow* threshold = find_row(rows, "jaccard-levenshtein", "threshold");
  REQUIRE(threshold != nullptr);
  CHECK(threshold->summary.series_count == 2);
  CHECK(threshold->summary.stddev_min == 0.0);
  CHECK(threshold->summary.stddev_max == doctest::Approx(0.5));

  // the lone leaf_w_struct=0.2 point cannot form a th_accept sweep
  const SensitivityRow* th_accept = find_row(rows, "cupid", "th_accept");
  REQUIRE(th_accept != nullptr);
  CHECK(th_accept->summary.series_count == 1);
  CHECK(th_accept->summary.stddev_max == doctest::Approx(0.5));

  // but it does pair up across leaf_w_struct at th_accept=0.3
  const SensitivityRow* leaf = find_row(rows, "cupid", "leaf_w_struct");
  REQUIRE(leaf != nullptr);
  CHECK(leaf->summary.series_count == 1);
  CHECK(leaf->summary.stddev_max == doctest::Approx(0.5));
}

TEST_CASE("parameters that never vary produce no sensitivity row") {
  const std::vector<ExperimentResult> results = {
      result("p1", ScenarioKind::unionable, "jaccard-levenshtein", {{"threshold", 0.8}}, 1.0),
      result("p2", ScenarioKind::unionable, "jaccard-levenshtein", {{"threshold", 0.8}}, 0.5),
  };
  CHECK(sensitivity_rows(results).empty());
}

TEST_CASE("reports land in three csv files") {
  const fs::path dir = fs::temp_directory_path() / "matchbench_report_test";
  fs::remove_all(dir);

  const std::vector<ExperimentResult> results = {
      result("p1", ScenarioKind::unionable, "cupid", {}, 0.5, 2.0),
  };
  write_reports(results, dir);

  std::ifstream recall(dir / "recall_summary.csv");
  REQUIRE(recall.good());
  std::stringstream buffer;
  buffer << recall.rdbuf();
  CHECK(buffer.str() ==
        "scenario,method,jobs,recall_min,recall_median,recall_max\n"
        "unionable,cupid,1,0.5,0.5,0.5\n");

  CHECK(fs::exists(dir / "sensitivity.csv"));
  std::ifstream runtime(dir / "runtime.csv");
  REQUIRE(runtime.good());
  std::stringstream rbuf;
  rbuf << runtime.rdbuf();
  CHECK(rbuf.str() == "method,jobs,mean_runtime_seconds\ncupid,1,2\n");

  CHECK_THROWS_AS(write_reports({}, dir), std::invalid_argument);
}
