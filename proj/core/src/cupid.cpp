#include "matchbench/cupid.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "matchbench/string_sim.hpp"

namespace matchbench {

namespace {

/// Small dictionary of column-name tokens that commonly mean the same thing.
const std::vector<std::pair<std::string_view, std::string_view>>& synonym_pairs() {
  static const std::vector<std::pair<std::string_view, std::string_view>> pairs = {
      {"id", "identifier"}, {"id", "key"},        {"name", "title"},
      {"first", "given"},   {"last", "surname"},  {"last", "family"},
      {"phone", "telephone"}, {"mobile", "cell"}, {"zip", "postcode"},
      {"zip", "postal"},    {"city", "town"},     {"country", "nation"},
      {"salary", "wage"},   {"salary", "pay"},    {"mail", "email"},
      {"dob", "birthdate"}, {"address", "location"}, {"company", "employer"},
  };
  return pairs;
}

bool synonymous(const std::string& a, const std::string& b) {
  for (const auto& [x, y] : synonym_pairs()) {
    if ((a == x && b == y) || (a == y && b == x)) return true;
  }
  return false;
}

double token_sim(const std::string& a, const std::string& b, bool use_synonyms) {
  if (use_synonyms && synonymous(a, b)) return 1.0;
  return normalized_string_sim(a, b);
}

}  // namespace

std::vector<std::string> tokenize_name(std::string_view name) {
  std::vector<std::string> tokens;
  std::string current;
  const auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::exchange(current, {}));
  };

  for (std::size_t i = 0; i < name.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(name[i]);
    if (!std::isalnum(c)) {
      flush();
      continue;
    }
    if (!current.empty()) {
      const unsigned char prev = static_cast<unsigned char>(name[i - 1]);
      const bool camel = std::isupper(c) && std::islower(prev);
      const bool digit_edge = (std::isdigit(c) != 0) != (std::isdigit(prev) != 0);
      if (camel || digit_edge) flush();
    }
    current.push_back(static_cast<char>(std::tolower(c)));
  }
  flush();
  return tokens;
}

double token_set_sim(const std::vector<std::string>& a, const std::vector<std::string>& b,
                     bool use_synonyms) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;

  double total = 0.0;
  for (const auto& ta : a) {
    double best = 0.0;
    for (const auto& tb : b) best = std::max(best, token_sim(ta, tb, use_synonyms));
    total += best;
  }
  for (const auto& tb : b) {
    double best = 0.0;
    for (const auto& ta : a) best = std::max(best, token_sim(ta, tb, use_synonyms));
    total += best;
  }
  return total / static_cast<double>(a.size() + b.size());
}

SchemaTree SchemaTree::build(const Table& table) {
  SchemaTree tree;
  tree.table_name = table.name();
  tree.table_tokens = tokenize_name(table.name());
  tree.leaves.reserve(table.column_count());
  for (const Column& c : table.columns()) {
    tree.leaves.push_back({c.id(), c.name(), c.kind(), tokenize_name(c.name())});
  }
  return tree;
}

double cupid_lsim(const SchemaTree::Leaf& a, const SchemaTree::Leaf& b, bool use_synonyms) {
  const double compat = a.kind == b.kind ? 1.0 : kKindCompatPenalty;
  return token_set_sim(a.tokens, b.tokens, use_synonyms) * compat;
}

double cupid_wsim(double lsim, double ssim, double w_struct) {
  return w_struct * ssim + (1.0 - w_struct) * lsim;
}

MatchList cupid_match(const Table& source, const Table& target, const CupidParams& params,
                      const MatchLimits& limits) {
  for (const double p : {params.leaf_w_struct, params.w_struct, params.th_accept}) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("cupid parameters must be in [0, 1]");
  }
  if (source.column_count() == 0 || target.column_count() == 0) {
    throw std::invalid_argument("both tables need at least one column");
  }

  const SchemaTree s = SchemaTree::build(source);
  const SchemaTree t = SchemaTree::build(target);
  const std::size_t m = s.leaves.size();
  const std::size_t n = t.leaves.size();

  std::vector<double> lsim(m * n);
  std::vector<double> ssim(m * n);
  std::vector<bool> strong_s(m, false);
  std::vector<bool> strong_t(n, false);

  for (std::size_t i = 0; i < m; ++i) {
    limits.check();
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t at = i * n + j;
      lsim[at] = cupid_lsim(s.leaves[i], t.leaves[j], params.use_synonyms);
      ssim[at] = s.leaves[i].kind == t.leaves[j].kind ? 1.0 : kKindCompatPenalty;
      if (cupid_wsim(lsim[at], ssim[at], params.leaf_w_struct) > params.th_accept) {
        strong_s[i] = true;
        strong_t[j] = true;
      }
    }
  }

  const double strong_leaves = static_cast<double>(std::count(strong_s.begin(), strong_s.end(), true) +
                                                   std::count(strong_t.begin(), strong_t.end(), true));
  const double root_ssim = strong_leaves / static_cast<double>(m + n);
  const double root_lsim = token_set_sim(s.table_tokens, t.table_tokens, params.use_synonyms);
  const double root_wsim = cupid_wsim(root_lsim, root_ssim, params.w_struct);

  // The root verdict feeds back into the leaves' structural similarity; the
  // cap keeps scores in range and lets a strong root reorder pairs whose
  // structural parts differ.
  const bool root_strong = root_wsim > params.th_accept;

  MatchList out;
  out.entries.reserve(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t at = i * n + j;
      const double adjusted =
          root_strong ? std::min(1.0, ssim[at] * kStructBoost) : ssim[at] * kStructDecay;
      const double score = cupid_wsim(lsim[at], adjusted, params.leaf_w_struct);
      out.entries.push_back(
          {s.leaves[i].id, s.leaves[i].name, t.leaves[j].id, t.leaves[j].name, score});
    }
  }
  out.finalize();
  return out;
}

}  // namespace matchbench
