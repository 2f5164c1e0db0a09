#include "matchbench/runner.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json_util.hpp"
#include "matchbench/matchers.hpp"
#include "matchbench/rng.hpp"

namespace matchbench {

namespace {

std::string iso8601_utc(std::chrono::system_clock::time_point tp) {
  const std::time_t t = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, 16);
  std::string digits(buf, res.ptr);
  return std::string(16 - digits.size(), '0') + digits;
}

struct Job {
  std::size_t pair_index;
  MatcherConfig config;
  std::string job_id;
};

detail::ordered_json result_to_json(const ExperimentResult& r, const std::string& started_at,
                                    const std::string& finished_at) {
  detail::ordered_json row;
  row["job_id"] = r.job_id;
  row["pair_id"] = r.pair_id;
  row["scenario"] = detail::scenario_to_json(r.scenario);
  row["method"] = r.config.method;
  row["params"] = detail::ordered_json::object();
  for (const auto& [key, value] : r.config.params) row["params"][key] = value;
  row["status"] = r.ok ? "ok" : "failed";
  if (r.ok) {
    row["recall_at_gt"] = r.recall;
    row["k"] = r.truth_size;
  } else {
    row["error"] = r.error;
  }
  row["runtime_seconds"] = r.runtime_seconds;
  row["started_at"] = started_at;
  row["finished_at"] = finished_at;
  return row;
}

ExperimentResult result_from_json(const detail::ordered_json& row) {
  ExperimentResult r;
  r.job_id = row.at("job_id").get<std::string>();
  r.pair_id = row.at("pair_id").get<std::string>();
  r.scenario = detail::scenario_from_json(row.at("scenario"));
  r.config.method = row.at("method").get<std::string>();
  for (const auto& [key, value] : row.at("params").items()) {
    r.config.params[key] = value.get<double>();
  }
  r.ok = row.at("status").get<std::string>() == "ok";
  if (r.ok) {
    r.recall = row.at("recall_at_gt").get<double>();
    r.truth_size = row.at("k").get<std::size_t>();
  } else {
    r.error = row.value("error", std::string("unknown error"));
  }
  r.runtime_seconds = row.value("runtime_seconds", 0.0);
  return r;
}

}  // namespace

std::string job_id_for(const std::string& pair_id, const MatcherConfig& config) {
  return hex64(Rng::hash64(pair_id + '\n' + config.canonical_string()));
}

SuiteConfig load_suite_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open config: " + file.string());
  detail::ordered_json j;
  in >> j;

  SuiteConfig config;
  for (const auto& input : j.at("inputs")) config.inputs.push_back(input.get<std::string>());
  config.output_dir = j.value("output_dir", std::string{});
  config.seed = j.value("seed", config.seed);
  config.repeats = j.value("repeats", config.repeats);
  config.workers = j.value("workers", config.workers);
  config.job_timeout_seconds = j.value("job_timeout_seconds", config.job_timeout_seconds);
  if (j.contains("noise")) {
    const auto& noise = j.at("noise");
    config.noise.typo_cell_rate = noise.value("typo_cell_rate", config.noise.typo_cell_rate);
    config.noise.numeric_noise_scale =
        noise.value("numeric_noise_scale", config.noise.numeric_noise_scale);
  }
  if (j.contains("grids")) {
    for (const auto& spec_json : j.at("grids")) {
      GridSpec spec;
      spec.method = spec_json.at("method").get<std::string>();
      if (spec_json.contains("axes")) {
        for (const auto& axis_json : spec_json.at("axes")) {
          GridAxis axis;
          axis.name = axis_json.at("name").get<std::string>();
          for (const auto& v : axis_json.at("values")) axis.values.push_back(v.get<double>());
          spec.axes.push_back(std::move(axis));
        }
      }
      config.grids.push_back(std::move(spec));
    }
  }
  if (j.contains("max_jobs")) config.max_jobs = j.at("max_jobs").get<std::size_t>();
  return config;
}

std::vector<ExperimentResult> load_results(const std::filesystem::path& journal) {
  std::ifstream in(journal);
  if (!in) throw std::runtime_error("cannot open journal: " + journal.string());

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  std::map<std::string, ExperimentResult> by_id;
  std::vector<std::string> order;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    detail::ordered_json row;
    try {
      row = detail::ordered_json::parse(lines[i]);
    } catch (const std::exception&) {
      // A torn final line means the writer died mid-append; anything earlier
      // is real corruption.
      if (i + 1 == lines.size()) break;
      throw std::runtime_error("corrupt journal line " + std::to_string(i + 1) + " in " +
                               journal.string());
    }
    ExperimentResult r = result_from_json(row);
    if (by_id.find(r.job_id) == by_id.end()) order.push_back(r.job_id);
    by_id[r.job_id] = std::move(r);
  }

  std::vector<ExperimentResult> out;
  out.reserve(order.size());
  for (const auto& id : order) out.push_back(std::move(by_id.at(id)));
  return out;
}

SuiteOutcome run_suite(const SuiteConfig& config) {
  if (config.inputs.empty()) throw std::invalid_argument("no input tables");
  if (config.output_dir.empty()) throw std::invalid_argument("no output directory");
  if (config.repeats == 0) throw std::invalid_argument("repeats must be positive");

  const std::filesystem::path out_dir(config.output_dir);
  std::filesystem::create_directories(out_dir);

  SuiteOutcome outcome;
  outcome.pairs_dir = out_dir / "pairs";
  outcome.journal = out_dir / "results.jsonl";

  // Fabricate every pair up front; ids must stay unique across inputs and
  // repeats because the journal is keyed by them.
  std::vector<DatasetPair> pairs;
  for (const std::string& input : config.inputs) {
    const Table table = load_csv(input);
    for (std::size_t r = 0; r < config.repeats; ++r) {
      SuiteFabrication made =
          fabricate_suite(table, Rng::mix(config.seed, 0x517eULL + r), config.noise);
      for (const auto& warning : made.skipped) outcome.warnings.push_back(warning);
      for (auto& pair : made.pairs) pairs.push_back(std::move(pair));
    }
  }
  {
    std::map<std::string, int> seen;
    for (const auto& pair : pairs) {
      if (++seen[pair.pair_id] > 1) {
        throw std::runtime_error("duplicate pair id '" + pair.pair_id +
                                 "' (same table fabricated twice?)");
      }
    }
  }
  write_pairs_with_manifest(pairs, outcome.pairs_dir);
  outcome.pair_count = pairs.size();

  const std::vector<MatcherConfig> configs =
      expand_grids(config.grids.empty() ? default_grid_specs() : config.grids);

  std::vector<Job> jobs;
  jobs.reserve(pairs.size() * configs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (const MatcherConfig& mc : configs) {
      jobs.push_back({p, mc, job_id_for(pairs[p].pair_id, mc)});
    }
  }
  outcome.job_count = jobs.size();

  std::map<std::string, bool> done;
  if (std::filesystem::exists(outcome.journal)) {
    for (const auto& r : load_results(outcome.journal)) done[r.job_id] = true;
  }

  std::ofstream journal(outcome.journal, std::ios::app);
  if (!journal) throw std::runtime_error("cannot append to " + outcome.journal.string());

  std::mutex journal_mutex;
  std::atomic<std::size_t> next_job{0};
  std::atomic<std::size_t> newly_completed{0};
  std::size_t skipped = 0;
  for (const Job& job : jobs) {
    if (done.count(job.job_id)) ++skipped;
  }
  outcome.skipped_existing = skipped;

  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next_job.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& job = jobs[i];
      if (done.count(job.job_id)) continue;
      if (config.max_jobs && newly_completed.load() >= *config.max_jobs) return;

      const DatasetPair& pair = pairs[job.pair_index];
      ExperimentResult result;
      result.job_id = job.job_id;
      result.pair_id = pair.pair_id;
      result.scenario = pair.scenario;
      result.config = job.config;

      MatchLimits limits;
      if (config.job_timeout_seconds > 0.0) {
        limits.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(config.job_timeout_seconds));
      }

      const auto started = std::chrono::system_clock::now();
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const MatchList matches = match(pair.source, pair.target, job.config, limits);
        result.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.recall = recall_at_ground_truth(matches, pair.truth);
        result.truth_size = pair.truth.size();
        result.ok = true;
      } catch (const std::exception& e) {
        result.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.ok = false;
        result.error = e.what();
      }
      const auto finished = std::chrono::system_clock::now();

      const detail::ordered_json row =
          result_to_json(result, iso8601_utc(started), iso8601_utc(finished));
      {
        std::lock_guard<std::mutex> lock(journal_mutex);
        journal << row.dump() << '\n';
        journal.flush();
      }
      newly_completed.fetch_add(1);
    }
  };

  std::size_t thread_count = config.workers;
  if (thread_count == 0) {
    thread_count = std::max(1u, std::thread::hardware_concurrency());
  }
  thread_count = std::max<std::size_t>(1, std::min(thread_count, jobs.size() ? jobs.size() : 1));

  std::vector<std::thread> threads;
  threads.reserve(thread_count);
  for (std::size_t t = 0; t < thread_count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  outcome.completed = skipped + newly_completed.load();
  return outcome;
}

}  // namespace matchbench
