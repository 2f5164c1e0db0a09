#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "matchbench/rng.hpp"

using matchbench::Rng;

TEST_SUITE("rng") {

TEST_CASE("same seed gives the same stream") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 200; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("stream values are pinned") {
  // Frozen so a refactor that silently changes the engine (and with it every
  // fabricated dataset) fails loudly.
  Rng r(42);
  CHECK(r.next() == 13679457532755275413ULL);
  CHECK(r.next() == 2949826092126892291ULL);
  CHECK(r.next() == 5139283748462763858ULL);
  CHECK(Rng::mix(1, 2) == 17911839290282890590ULL);
  CHECK(Rng::hash64("abc") == 16654208175385433931ULL);
  CHECK(Rng::hash64("") == 14695981039346656037ULL);
}

TEST_CASE("below stays in range and hits every value") {
  Rng r(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t v = r.below(7);
    CHECK(v < 7);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
  CHECK(r.below(0) == 0);
  CHECK(r.below(1) == 0);
}

TEST_CASE("uniform01 lies in [0, 1)") {
  Rng r(3);
  for (int i = 0; i < 2000; ++i) {
    const double v = r.uniform01();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("normal deviates have plausible moments") {
  Rng r(9);
  const int n = 20000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = r.normal();
    CHECK(std::isfinite(v));
    sum += v;
    sq += v * v;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.05);
  CHECK(std::abs(var - 1.0) < 0.1);
}

TEST_CASE("shuffle permutes") {
  std::vector<int> v = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  Rng r(11);
  r.shuffle(v);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(v != sorted);  // seed 11 happens not to give identity
}

TEST_CASE("sample_indices returns k distinct in-range indices") {
  Rng r(5);
  const auto picked = r.sample_indices(50, 12);
  CHECK(picked.size() == 12);
  std::set<std::size_t> unique(picked.begin(), picked.end());
  CHECK(unique.size() == 12);
  for (const std::size_t i : picked) CHECK(i < 50);
  CHECK(r.sample_indices(3, 10).size() == 3);
}

}  // TEST_SUITE
