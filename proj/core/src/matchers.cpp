#include "matchbench/matchers.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "matchbench/cupid.hpp"
#include "matchbench/distribution.hpp"
#include "matchbench/jaccard_lev.hpp"
#include "matchbench/similarity_flooding.hpp"

namespace matchbench {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::jaccard_levenshtein: return "jaccard-levenshtein";
    case Method::similarity_flooding: return "similarity-flooding";
    case Method::cupid: return "cupid";
    case Method::distribution_based: return "distribution-based";
  }
  throw std::logic_error("unreachable");
}

std::optional<Method> parse_method(std::string_view name) {
  for (const Method m : {Method::jaccard_levenshtein, Method::similarity_flooding, Method::cupid,
                         Method::distribution_based}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

bool is_instance_based(Method method) {
  return method == Method::jaccard_levenshtein || method == Method::distribution_based;
}

void MatchList::finalize() {
  for (const MatchEntry& e : entries) {
    if (!(e.score >= 0.0 && e.score <= 1.0)) {
      throw std::logic_error("match score out of [0, 1] for " + e.source_id + " -> " +
                             e.target_id);
    }
  }
  std::sort(entries.begin(), entries.end(), [](const MatchEntry& a, const MatchEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(a.source_name, a.target_name, a.source_id, a.target_id) <
           std::tie(b.source_name, b.target_name, b.source_id, b.target_id);
  });
  std::set<std::pair<std::string, std::string>> seen;
  for (const MatchEntry& e : entries) {
    if (!seen.insert({e.source_id, e.target_id}).second) {
      throw std::logic_error("duplicate correspondence " + e.source_id + " -> " + e.target_id);
    }
  }
}

double MatcherConfig::param_or(std::string_view name, double fallback) const {
  const auto it = params.find(std::string(name));
  return it == params.end() ? fallback : it->second;
}

std::string MatcherConfig::canonical_string() const {
  std::string out = method;
  out += '|';
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) out += ';';
    first = false;
    out += key;
    out += '=';
    out += format_double(value);
  }
  return out;
}

namespace {

void reject_unknown_params(const MatcherConfig& config,
                           std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : config.params) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw std::invalid_argument("method '" + config.method + "' takes no parameter '" + key +
                                  "'");
    }
  }
}

}  // namespace

MatchList match(const Table& source, const Table& target, const MatcherConfig& config,
                const MatchLimits& limits, MatchDebug* debug) {
  const std::optional<Method> method = parse_method(config.method);
  if (!method) throw std::invalid_argument("unknown method '" + config.method + "'");

  switch (*method) {
    case Method::jaccard_levenshtein: {
      reject_unknown_params(config, {"threshold"});
      return jaccard_levenshtein_match(source, target, config.param_or("threshold", 0.8), limits);
    }
    case Method::similarity_flooding: {
      reject_unknown_params(config, {});
      FloodResult result =
          similarity_flooding_flood(source, target, kFloodEpsilon, kFloodMaxIterations, limits);
      if (debug) {
        debug->flood_residuals = result.residuals;
        debug->flood_converged = result.converged;
        debug->flood_iterations = result.iterations;
      }
      return std::move(result.matches);
    }
    case Method::cupid: {
      reject_unknown_params(config, {"leaf_w_struct", "w_struct", "th_accept", "use_synonyms"});
      CupidParams params;
      params.leaf_w_struct = config.param_or("leaf_w_struct", params.leaf_w_struct);
      params.w_struct = config.param_or("w_struct", params.w_struct);
      params.th_accept = config.param_or("th_accept", params.th_accept);
      params.use_synonyms = config.param_or("use_synonyms", params.use_synonyms ? 1.0 : 0.0) != 0.0;
      return cupid_match(source, target, params, limits);
    }
    case Method::distribution_based: {
      reject_unknown_params(config, {"phase1_theta", "phase2_theta", "max_bins"});
      DistributionParams params;
      params.phase1_theta = config.param_or("phase1_theta", params.phase1_theta);
      params.phase2_theta = config.param_or("phase2_theta", params.phase2_theta);
      params.max_bins =
          static_cast<std::size_t>(config.param_or("max_bins", static_cast<double>(params.max_bins)));
      return distribution_match(source, target, params, limits);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace matchbench
