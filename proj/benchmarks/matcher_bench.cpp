// Microbenchmarks for the distance primitives and the four matchers.
// Matcher benchmarks run on a fabricated noisy pair so the fuzzy paths do
// real work; sizes are rows per table.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "matchbench/distribution.hpp"
#include "matchbench/fabricate.hpp"
#include "matchbench/matchers.hpp"
#include "matchbench/rng.hpp"
#include "matchbench/string_sim.hpp"
#include "matchbench/synth.hpp"

namespace {

using namespace matchbench;

const DatasetPair& noisy_pair(std::size_t rows) {
  static std::map<std::size_t, DatasetPair> cache;
  const auto it = cache.find(rows);
  if (it != cache.end()) return it->second;

  ScenarioSpec spec;
  spec.kind = ScenarioKind::semantically_joinable;
  spec.column_overlap = ColumnOverlap::of(0.5);
  spec.instance_noise = true;
  spec.seed = 42;
  return cache.emplace(rows, fabricate(make_demo_table(rows, 42), spec)).first->second;
}

void BM_Levenshtein(benchmark::State& state) {
  const std::string a = "jan.vandenberg@example-post.net";
  const std::string b = "joris.vandervelde@example-post.net";
  for (auto _ : state) {
    benchmark::DoNotOptimize(levenshtein(a, b));
  }
}
BENCHMARK(BM_Levenshtein);

void BM_LevenshteinBounded(benchmark::State& state) {
  const std::string a = "jan.vandenberg@example-post.net";
  const std::string b = "joris.vandervelde@example-post.net";
  const auto cutoff = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(levenshtein_bounded(a, b, cutoff));
  }
}
BENCHMARK(BM_LevenshteinBounded)->Arg(2)->Arg(8)->Arg(27);

void BM_Emd1d(benchmark::State& state) {
  const auto bins = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  std::vector<double> a(bins);
  std::vector<double> b(bins);
  for (auto& v : a) v = rng.uniform01();
  for (auto& v : b) v = rng.uniform01();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (auto _ : state) {
    benchmark::DoNotOptimize(emd_1d(a, b));
  }
}
BENCHMARK(BM_Emd1d)->Arg(10)->Arg(100);

void run_matcher(benchmark::State& state, const char* method) {
  const DatasetPair& pair = noisy_pair(static_cast<std::size_t>(state.range(0)));
  MatcherConfig config;
  config.method = method;
  for (auto _ : state) {
    benchmark::DoNotOptimize(match(pair.source, pair.target, config));
  }
}

void BM_JaccardLevenshtein(benchmark::State& state) { run_matcher(state, "jaccard-levenshtein"); }
BENCHMARK(BM_JaccardLevenshtein)->Unit(benchmark::kMillisecond)->Arg(100)->Arg(300);

void BM_SimilarityFlooding(benchmark::State& state) { run_matcher(state, "similarity-flooding"); }
BENCHMARK(BM_SimilarityFlooding)->Unit(benchmark::kMicrosecond)->Arg(100)->Arg(300);

void BM_Cupid(benchmark::State& state) { run_matcher(state, "cupid"); }
BENCHMARK(BM_Cupid)->Unit(benchmark::kMicrosecond)->Arg(100)->Arg(300);

void BM_Distribution(benchmark::State& state) { run_matcher(state, "distribution-based"); }
BENCHMARK(BM_Distribution)->Unit(benchmark::kMillisecond)->Arg(100)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
