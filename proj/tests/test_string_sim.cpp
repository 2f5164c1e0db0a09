#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "matchbench/rng.hpp"
#include "matchbench/string_sim.hpp"

using namespace matchbench;

namespace {

/// Textbook full-matrix edit distance, kept as the oracle for the
/// production implementations.
std::size_t reference_levenshtein(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[a.size()][b.size()];
}

std::string random_string(Rng& rng, std::size_t max_len) {
  const std::size_t len = rng.below(max_len + 1);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back("abcd"[rng.below(4)]);
  return s;
}

}  // namespace

TEST_SUITE("string_sim") {

TEST_CASE("known distances") {
  CHECK(levenshtein("kitten", "sitting") == 3);
  CHECK(levenshtein("flaw", "lawn") == 2);
  CHECK(levenshtein("", "abc") == 3);
  CHECK(levenshtein("abc", "") == 3);
  CHECK(levenshtein("same", "same") == 0);
}

TEST_CASE("levenshtein agrees with the reference on random strings") {
  Rng rng(77);
  for (int i = 0; i < 500; ++i) {
    const std::string a = random_string(rng, 14);
    const std::string b = random_string(rng, 14);
    CHECK(levenshtein(a, b) == reference_levenshtein(a, b));
  }
}

TEST_CASE("bounded variant is exact within the cutoff") {
  Rng rng(78);
  for (int i = 0; i < 500; ++i) {
    const std::string a = random_string(rng, 14);
    const std::string b = random_string(rng, 14);
    const std::size_t exact = reference_levenshtein(a, b);
    for (const std::size_t cutoff : {std::size_t{0}, std::size_t{1}, std::size_t{3},
                                     std::size_t{8}, std::size_t{20}}) {
      const std::size_t got = levenshtein_bounded(a, b, cutoff);
      if (exact <= cutoff) {
        CHECK(got == exact);
      } else {
        CHECK(got > cutoff);
      }
    }
  }
}

TEST_CASE("normalized distance and similarity") {
  CHECK(normalized_levenshtein("", "") == 0.0);
  CHECK(normalized_string_sim("", "") == 1.0);
  CHECK(normalized_levenshtein("abc", "abc") == 0.0);
  CHECK(normalized_levenshtein("a", "b") == 1.0);
  CHECK(normalized_levenshtein("kitten", "sitting") == doctest::Approx(3.0 / 7.0));
  CHECK(normalized_string_sim("kitten", "sitting") == doctest::Approx(4.0 / 7.0));
}

}  // TEST_SUITE
