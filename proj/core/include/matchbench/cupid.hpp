#pragma once

#include <string>
#include <vector>

#include "matchbench/match_types.hpp"
#include "matchbench/table.hpp"

namespace matchbench {

/// Multiplier applied to linguistic similarity across differing data kinds.
inline constexpr double kKindCompatPenalty = 0.5;
/// Leaf structural-similarity adjustment driven by the root comparison:
/// boosted (capped at 1) under a strong root, decayed under a weak one.
inline constexpr double kStructBoost = 1.2;
inline constexpr double kStructDecay = 0.9;

/// Two-level schema tree: the table is the root, columns are the leaves.
struct SchemaTree {
  struct Leaf {
    std::string id;
    std::string name;
    DataKind kind;
    std::vector<std::string> tokens;
  };

  std::string table_name;
  std::vector<std::string> table_tokens;
  std::vector<Leaf> leaves;

  static SchemaTree build(const Table& table);
};

/// Splits an identifier on underscores/punctuation, camel-case humps and
/// letter-digit boundaries; tokens are lowercased.
std::vector<std::string> tokenize_name(std::string_view name);

/// Symmetric average best-pair token similarity in [0, 1]. With synonyms
/// enabled, dictionary token pairs count as identical.
double token_set_sim(const std::vector<std::string>& a, const std::vector<std::string>& b,
                     bool use_synonyms);

/// Linguistic similarity of two leaves: token similarity of the names scaled
/// by data-kind compatibility (1.0 same kind, kKindCompatPenalty otherwise).
double cupid_lsim(const SchemaTree::Leaf& a, const SchemaTree::Leaf& b, bool use_synonyms);

/// Weighted leaf similarity: w_struct * ssim + (1 - w_struct) * lsim.
double cupid_wsim(double lsim, double ssim, double w_struct);

struct CupidParams {
  double leaf_w_struct = 0.2;
  double w_struct = 0.2;
  double th_accept = 0.7;
  bool use_synonyms = false;
};

/// Leaf pairs are scored by weighted linguistic/structural similarity; the
/// root pair's strength (fraction of strongly linked leaves blended with the
/// table-name similarity) then re-weights every leaf pair's structural part
/// before the final score is computed.
MatchList cupid_match(const Table& source, const Table& target, const CupidParams& params,
                      const MatchLimits& limits = {});

}  // namespace matchbench
