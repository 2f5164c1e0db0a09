#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "matchbench/cupid.hpp"
#include "matchbench/jaccard_lev.hpp"
#include "matchbench/matchers.hpp"
#include "matchbench/similarity_flooding.hpp"

using namespace matchbench;

namespace {

std::vector<CellValue> cells(std::vector<std::string> raws) {
  std::vector<CellValue> out;
  for (auto& r : raws) out.emplace_back(std::move(r));
  return out;
}

Table one_column(const std::string& table, const std::string& name,
                 std::vector<std::string> raws) {
  return Table(table, {Column("c0", name, cells(std::move(raws)))});
}

const MatchEntry* find_entry(const MatchList& list, const std::string& source_name,
                             const std::string& target_name) {
  for (const auto& e : list.entries) {
    if (e.source_name == source_name && e.target_name == target_name) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("fuzzy intersection respects the distance budget") {
  const std::vector<std::string> a = {"DE", "FR", "NL"};
  const std::vector<std::string> b = {"DE", "IT", "NL"};
  // two-letter codes: cutoff floor(0.8 * 2) = 1, unequal codes differ in both letters
  CHECK(fuzzy_intersection_size(a, b, 0.8) == 2);
  CHECK(fuzzy_intersection_size(a, b, 0.0) == 2);

  // one edit over six letters is within 0.2 but not 0.1
  CHECK(fuzzy_intersection_size({"colour"}, {"color"}, 0.2) == 1);
  CHECK(fuzzy_intersection_size({"colour"}, {"color"}, 0.1) == 0);

  CHECK(fuzzy_intersection_size({}, b, 0.8) == 0);
  CHECK(fuzzy_intersection_size(a, {}, 0.8) == 0);
}

TEST_CASE("fuzzy intersection consumes each partner at most once") {
  // both of "aa", "ab" are within one edit of "ab", but it can only pair once
  CHECK(fuzzy_intersection_size({"aa", "ab"}, {"ab"}, 0.5) == 1);
  CHECK(fuzzy_intersection_size({"ab"}, {"aa", "ab"}, 0.5) == 1);
}

TEST_CASE("jaccard scores follow the overlap formula") {
  const Table s = one_column("left", "country", {"NL", "DE", "FR"});
  const Table t = one_column("right", "land", {"NL", "DE", "IT"});

  for (const double threshold : {0.4, 0.8}) {
    const MatchList out = jaccard_levenshtein_match(s, t, threshold);
    REQUIRE(out.entries.size() == 1);
    // intersection 2, union 3 + 3 - 2
    CHECK(out.entries[0].score == doctest::Approx(0.5));
  }
}

TEST_CASE("identical value sets score one regardless of order and repeats") {
  const Table s = one_column("left", "a", {"xx", "yy", "zz", "xx"});
  const Table t = one_column("right", "b", {"zz", "xx", "yy", "yy", "zz"});
  const MatchList out = jaccard_levenshtein_match(s, t, 0.8);
  REQUIRE(out.entries.size() == 1);
  CHECK(out.entries[0].score == 1.0);
}

TEST_CASE("all-null columns carry no evidence") {
  const Table s = one_column("left", "a", {"", "", ""});
  const Table t = one_column("right", "b", {"xx", "yy", ""});
  const MatchList out = jaccard_levenshtein_match(s, t, 0.8);
  REQUIRE(out.entries.size() == 1);
  CHECK(out.entries[0].score == 0.0);

  const MatchList both = jaccard_levenshtein_match(s, s, 0.8);
  CHECK(both.entries[0].score == 0.0);
}

TEST_CASE("jaccard matcher validates its inputs") {
  const Table t = one_column("right", "b", {"xx"});
  CHECK_THROWS_AS(jaccard_levenshtein_match(t, t, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(jaccard_levenshtein_match(t, t, 1.5), std::invalid_argument);
  const Table empty("empty", {});
  CHECK_THROWS_AS(jaccard_levenshtein_match(empty, t, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(jaccard_levenshtein_match(t, empty, 0.5), std::invalid_argument);
}

TEST_CASE("finalize orders by score then names then ids") {
  MatchList list;
  list.entries = {
      {"s2", "beta", "t1", "x", 0.5},
      {"s1", "alpha", "t2", "y", 0.9},
      {"s3", "beta", "t0", "a", 0.5},
      {"s0", "alpha", "t9", "y", 0.9},
  };
  list.finalize();
  REQUIRE(list.entries.size() == 4);
  // 0.9 ties break on ids (names equal), 0.5 ties on target name
  CHECK(list.entries[0].source_id == "s0");
  CHECK(list.entries[1].source_id == "s1");
  CHECK(list.entries[2].source_id == "s3");
  CHECK(list.entries[3].source_id == "s2");
}

TEST_CASE("finalize rejects out-of-range scores and duplicates") {
  MatchList high;
  high.entries = {{"s", "a", "t", "b", 1.2}};
  CHECK_THROWS_AS(high.finalize(), std::logic_error);

  MatchList low;
  low.entries = {{"s", "a", "t", "b", -0.01}};
  CHECK_THROWS_AS(low.finalize(), std::logic_error);

  MatchList bad;
  bad.entries = {{"s", "a", "t", "b", std::nan("")}};
  CHECK_THROWS_AS(bad.finalize(), std::logic_error);

  MatchList dup;
  dup.entries = {{"s", "a", "t", "b", 0.4}, {"s", "a", "t", "b", 0.2}};
  CHECK_THROWS_AS(dup.finalize(), std::logic_error);
}

TEST_CASE("configs canonicalize to a stable string") {
  MatcherConfig config;
  config.method = "cupid";
  config.params = {{"w_struct", 0.2}, {"leaf_w_struct", 0.0}, {"th_accept", 0.3}};
  CHECK(config.canonical_string() == "cupid|leaf_w_struct=0;th_accept=0.3;w_struct=0.2");

  MatcherConfig bare;
  bare.method = "similarity-flooding";
  CHECK(bare.canonical_string() == "similarity-flooding|");

  CHECK(config.param_or("th_accept", 9.0) == 0.3);
  CHECK(config.param_or("missing", 9.0) == 9.0);
}

TEST_CASE("method names round-trip") {
  for (const Method m : {Method::jaccard_levenshtein, Method::similarity_flooding, Method::cupid,
                         Method::distribution_based}) {
    const auto parsed = parse_method(to_string(m));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == m);
  }
  CHECK(!parse_method("coma").has_value());
  CHECK(!parse_method("").has_value());

  CHECK(is_instance_based(Method::jaccard_levenshtein));
  CHECK(is_instance_based(Method::distribution_based));
  CHECK(!is_instance_based(Method::similarity_flooding));
  CHECK(!is_instance_based(Method::cupid));
}

TEST_CASE("dispatcher rejects unknown methods and parameters") {
  const Table t = one_column("left", "a", {"xx", "yy"});

  MatcherConfig unknown;
  unknown.method = "coma";
  CHECK_THROWS_AS(match(t, t, unknown), std::invalid_argument);

  MatcherConfig stray;
  stray.method = "cupid";
  stray.params = {{"threshold", 0.5}};
  CHECK_THROWS_AS(match(t, t, stray), std::invalid_argument);

  MatcherConfig flood;
  flood.method = "similarity-flooding";
  flood.params = {{"epsilon", 0.1}};
  CHECK_THROWS_AS(match(t, t, flood), std::invalid_argument);
}

TEST_CASE("dispatcher defaults match explicit parameters") {
  const Table s = one_column("left", "a", {"colour", "metre"});
  const Table t = one_column("right", "b", {"color", "meter"});

  MatcherConfig implicit;
  implicit.method = "jaccard-levenshtein";
  MatcherConfig explicit_cfg = implicit;
  explicit_cfg.params = {{"threshold", 0.8}};

  const MatchList a = match(s, t, implicit);
  const MatchList b = match(s, t, explicit_cfg);
  REQUIRE(a.entries.size() == b.entries.size());
  CHECK(a.entries[0].score == b.entries[0].score);
}

TEST_CASE("propagation graph arcs come in labeled forward/reverse pairs") {
  const Table s("people", {Column("c0", "name", cells({"ann", "bo"})),
                           Column("c1", "age", cells({"30", "41"}))});
  const Table t("staff", {Column("c0", "full_name", cells({"ann k", "bo p"})),
                          Column("c1", "years", cells({"31", "40"}))});

  const PropagationGraph pg = PropagationGraph::build(s, t);
  REQUIRE(!pg.nodes.empty());
  REQUIRE(!pg.arcs.empty());
  CHECK(pg.arcs.size() % 2 == 0);

  std::multiset<std::tuple<std::size_t, std::size_t, std::string>> directed;
  for (const auto& arc : pg.arcs) {
    CHECK(arc.weight > 0.0);
    CHECK(arc.weight <= 1.0);  // inverse average of degrees >= 1 each
    CHECK(arc.from < pg.nodes.size());
    CHECK(arc.to < pg.nodes.size());
    directed.insert({arc.from, arc.to, arc.label});
  }
  for (const auto& arc : pg.arcs) {
    CHECK(directed.count({arc.to, arc.from, arc.label}) >= 1);
  }

  // column pairs exist for the full cross product
  std::size_t column_pairs = 0;
  for (const auto& node : pg.nodes) {
    if (node.kind == PropagationGraph::PairKind::columns) ++column_pairs;
  }
  CHECK(column_pairs == 4);
}

TEST_CASE("identical literal pairs seed at one") {
  const Table s("people", {Column("c0", "name", cells({"ann", "bo"}))});
  const PropagationGraph pg = PropagationGraph::build(s, s);
  bool saw_name = false;
  bool saw_kind = false;
  for (const auto& node : pg.nodes) {
    if (node.kind == PropagationGraph::PairKind::names && node.left == node.right) {
      CHECK(node.seed == 1.0);
      saw_name = true;
    }
    if (node.kind == PropagationGraph::PairKind::kinds && node.left == node.right) {
      CHECK(node.seed == 1.0);
      saw_kind = true;
    }
    if (node.kind == PropagationGraph::PairKind::tables ||
        node.kind == PropagationGraph::PairKind::columns) {
      CHECK(node.seed == 0.0);
    }
  }
  CHECK(saw_name);
  CHECK(saw_kind);
}

TEST_CASE("flooding a table against itself ranks the diagonal first") {
  const Table t("people", {Column("c0", "name", cells({"ann", "bo", "cy"})),
                           Column("c1", "age", cells({"30", "41", "52"})),
                           Column("c2", "city", cells({"x", "y", "z"}))});

  const FloodResult result = similarity_flooding_flood(t, t);
  CHECK(result.converged);
  CHECK(result.iterations == result.residuals.size());
  REQUIRE(!result.residuals.empty());
  CHECK(result.residuals.back() < kFloodEpsilon);

  REQUIRE(result.matches.entries.size() == 9);
  std::set<std::pair<std::string, std::string>> top;
  for (std::size_t i = 0; i < 3; ++i) {
    top.insert({result.matches.entries[i].source_id, result.matches.entries[i].target_id});
  }
  const std::set<std::pair<std::string, std::string>> diagonal = {
      {"c0", "c0"}, {"c1", "c1"}, {"c2", "c2"}};
  CHECK(top == diagonal);
}

TEST_CASE("flood results surface through the dispatcher debug channel") {
  const Table t("people", {Column("c0", "name", cells({"ann", "bo"})),
                           Column("c1", "age", cells({"30", "41"}))});
  MatcherConfig config;
  config.method = "similarity-flooding";
  MatchDebug debug;
  const MatchList out = match(t, t, config, {}, &debug);
  CHECK(!out.entries.empty());
  CHECK(debug.flood_converged);
  CHECK(debug.flood_iterations == debug.flood_residuals.size());
  REQUIRE(!debug.flood_residuals.empty());
  CHECK(debug.flood_residuals.back() < kFloodEpsilon);
}

TEST_CASE("name tokenization splits humps, digits and punctuation") {
  CHECK(tokenize_name("firstName") == std::vector<std::string>{"first", "name"});
  CHECK(tokenize_name("first_name") == std::vector<std::string>{"first", "name"});
  CHECK(tokenize_name("zip-code ") == std::vector<std::string>{"zip", "code"});
  CHECK(tokenize_name("Addr2Line") == std::vector<std::string>{"addr", "2", "line"});
  CHECK(tokenize_name("HTTPServer") == std::vector<std::string>{"httpserver"});
  CHECK(tokenize_name("") == std::vector<std::string>{});
}

TEST_CASE("token set similarity averages best pairs both ways") {
  CHECK(token_set_sim({"name"}, {"name"}, false) == doctest::Approx(1.0));
  // "first" shares no letters with "name": best pair 0, the rest match exactly
  CHECK(token_set_sim({"first", "name"}, {"name"}, false) == doctest::Approx(2.0 / 3.0));
  CHECK(token_set_sim({}, {}, false) == 1.0);
  CHECK(token_set_sim({"x"}, {}, false) == 0.0);

  CHECK(token_set_sim({"zip"}, {"postcode"}, true) == doctest::Approx(1.0));
  CHECK(token_set_sim({"zip"}, {"postcode"}, false) < 0.5);
}

TEST_CASE("leaf linguistic similarity scales with kind compatibility") {
  const SchemaTree::Leaf text_value{"c0", "value", DataKind::textual, {"value"}};
  const SchemaTree::Leaf num_value{"c1", "value", DataKind::numeric, {"value"}};
  CHECK(cupid_lsim(text_value, text_value, false) == doctest::Approx(1.0));
  CHECK(cupid_lsim(text_value, num_value, false) == doctest::Approx(kKindCompatPenalty));
}

TEST_CASE("zero structural weight reduces the leaf score to linguistics") {
  const Table s("left", {Column("c0", "value", cells({"aa", "bb"})),
                         Column("c1", "total", cells({"1", "2"}))});
  const Table t("right", {Column("c0", "value", cells({"cc", "dd"})),
                          Column("c1", "total", cells({"3", "4"}))});
  CupidParams params;
  params.leaf_w_struct = 0.0;
  const MatchList out = cupid_match(s, t, params);

  const MatchEntry* same = find_entry(out, "value", "value");
  REQUIRE(same != nullptr);
  CHECK(same->score == doctest::Approx(1.0));

  // same name across kinds keeps only the compatibility penalty
  const MatchEntry* cross = find_entry(out, "value", "total");
  REQUIRE(cross != nullptr);
  CHECK(cross->score == doctest::Approx(0.0));  // "value" vs "total" share no best pairs
}

TEST_CASE("kind mismatch halves an otherwise perfect name score") {
  const Table s("left", {Column("c0", "value", cells({"aa", "bb"}))});
  const Table t("right", {Column("c0", "value", cells({"1", "2"}))});
  CupidParams params;
  params.leaf_w_struct = 0.0;
  const MatchList out = cupid_match(s, t, params);
  REQUIRE(out.entries.size() == 1);
  CHECK(out.entries[0].score == doctest::Approx(kKindCompatPenalty));
}

TEST_CASE("the acceptance threshold flips the root verdict") {
  // table names "people_a"/"people_b" have token similarity 0.5; with the
  // structural weight at the root zeroed, the root is strong at 0.3 and weak
  // at 0.8, which boosts or decays every leaf's structural part.
  const Table s("people_a", {Column("c0", "name", cells({"ann", "bo"}))});
  const Table t("people_b", {Column("c0", "name", cells({"cy", "di"}))});

  CupidParams params;
  params.leaf_w_struct = 0.5;
  params.w_struct = 0.0;

  params.th_accept = 0.3;
  const MatchList strong = cupid_match(s, t, params);
  params.th_accept = 0.8;
  const MatchList weak = cupid_match(s, t, params);

  REQUIRE(strong.entries.size() == 1);
  REQUIRE(weak.entries.size() == 1);
  CHECK(strong.entries[0].score == doctest::Approx(1.0));   // 0.5*min(1, 1.2) + 0.5*1
  CHECK(weak.entries[0].score == doctest::Approx(0.95));    // 0.5*0.9 + 0.5*1
}

TEST_CASE("synonyms lift dictionary name pairs to full similarity") {
  const Table s("left", {Column("c0", "dob", cells({"aa", "bb"}))});
  const Table t("right", {Column("c0", "birthdate", cells({"cc", "dd"}))});

  CupidParams params;
  params.leaf_w_struct = 0.0;
  const MatchList plain = cupid_match(s, t, params);
  params.use_synonyms = true;
  const MatchList lifted = cupid_match(s, t, params);

  REQUIRE(plain.entries.size() == 1);
  REQUIRE(lifted.entries.size() == 1);
  CHECK(plain.entries[0].score < 0.5);
  CHECK(lifted.entries[0].score == doctest::Approx(1.0));
}

TEST_CASE("cupid validates parameter ranges") {
  const Table t("left", {Column("c0", "a", cells({"x"}))});
  CupidParams params;
  params.th_accept = 1.5;
  CHECK_THROWS_AS(cupid_match(t, t, params), std::invalid_argument);
  params.th_accept = 0.5;
  params.leaf_w_struct = -0.2;
  CHECK_THROWS_AS(cupid_match(t, t, params), std::invalid_argument);
}
