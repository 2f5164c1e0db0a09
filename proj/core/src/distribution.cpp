#include "matchbench/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace matchbench {

double emd_1d(const std::vector<double>& h1, const std::vector<double>& h2) {
  if (h1.size() != h2.size()) {
    throw std::invalid_argument("quantile vectors must have equal length");
  }
  if (h1.empty()) throw std::invalid_argument("quantile vectors must not be empty");
  double total = 0.0;
  for (std::size_t i = 0; i < h1.size(); ++i) total += std::abs(h1[i] - h2[i]);
  return total / static_cast<double>(h1.size());
}

std::vector<double> quantiles_of_sorted(const std::vector<double>& sorted_values, std::size_t q) {
  if (q == 0) throw std::invalid_argument("bin count must be positive");
  if (sorted_values.empty()) throw std::invalid_argument("no values to sketch");
  const std::size_t n = sorted_values.size();
  std::vector<double> out(q);
  for (std::size_t i = 0; i < q; ++i) out[i] = sorted_values[i * n / q];
  return out;
}

namespace {

std::vector<double> normalize_sorted(std::vector<double> sorted, double lo, double hi) {
  if (hi <= lo) {
    std::fill(sorted.begin(), sorted.end(), 0.5);
    return sorted;
  }
  for (double& v : sorted) v = (v - lo) / (hi - lo);
  return sorted;
}

std::size_t distinct_count_sorted(const std::vector<double>& sorted) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] != sorted[i - 1]) ++d;
  }
  return d;
}

/// Ranks of a sorted string multiset within a sorted distinct universe,
/// normalized to [0, 1].
std::vector<double> ranks_in_universe(const std::vector<std::string>& sorted_values,
                                      const std::vector<std::string>& universe) {
  const double denom = universe.size() > 1 ? static_cast<double>(universe.size() - 1) : 0.0;
  std::vector<double> ranks;
  ranks.reserve(sorted_values.size());
  std::size_t u = 0;
  for (const auto& v : sorted_values) {
    while (u < universe.size() && universe[u] < v) ++u;
    ranks.push_back(denom > 0.0 ? static_cast<double>(u) / denom : 0.5);
  }
  return ranks;
}

}  // namespace

double numeric_pair_emd(std::vector<double> a, std::vector<double> b, std::size_t max_bins) {
  if (a.empty() || b.empty()) throw std::invalid_argument("no values to compare");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double lo = std::min(a.front(), b.front());
  const double hi = std::max(a.back(), b.back());
  const std::size_t q =
      std::max<std::size_t>(1, std::min({max_bins, distinct_count_sorted(a), distinct_count_sorted(b)}));
  return emd_1d(quantiles_of_sorted(normalize_sorted(std::move(a), lo, hi), q),
                quantiles_of_sorted(normalize_sorted(std::move(b), lo, hi), q));
}

double textual_pair_emd(std::vector<std::string> a, std::vector<std::string> b,
                        std::size_t max_bins) {
  if (a.empty() || b.empty()) throw std::invalid_argument("no values to compare");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  std::vector<std::string> universe;
  universe.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(universe));
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  std::size_t distinct_a = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == 0 || a[i] != a[i - 1]) ++distinct_a;
  }
  std::size_t distinct_b = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i == 0 || b[i] != b[i - 1]) ++distinct_b;
  }
  const std::size_t q = std::max<std::size_t>(1, std::min({max_bins, distinct_a, distinct_b}));
  return emd_1d(quantiles_of_sorted(ranks_in_universe(a, universe), q),
                quantiles_of_sorted(ranks_in_universe(b, universe), q));
}

std::vector<double> column_quantiles(const Column& column, std::size_t q) {
  if (column.kind() == DataKind::numeric) {
    std::vector<double> values = column.numeric_values();
    if (values.empty()) throw std::invalid_argument("column '" + column.name() + "' has no values");
    std::sort(values.begin(), values.end());
    const double lo = values.front();
    const double hi = values.back();
    return quantiles_of_sorted(normalize_sorted(std::move(values), lo, hi), q);
  }
  std::vector<std::string> values = column.non_null_values();
  if (values.empty()) throw std::invalid_argument("column '" + column.name() + "' has no values");
  std::sort(values.begin(), values.end());
  std::vector<std::string> universe = values;
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  return quantiles_of_sorted(ranks_in_universe(values, universe), q);
}

namespace {

constexpr double kNoLink = std::numeric_limits<double>::infinity();

struct ColumnNode {
  bool from_source;
  const Column* column;
  std::vector<std::string> raws;     // non-null, sorted
  std::vector<double> numbers;       // parsed, sorted (numeric columns)
  bool numeric;
};

double node_pair_emd(const ColumnNode& a, const ColumnNode& b, std::size_t max_bins) {
  if (a.numeric && b.numeric) return numeric_pair_emd(a.numbers, b.numbers, max_bins);
  return textual_pair_emd(a.raws, b.raws, max_bins);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

struct Candidate {
  std::vector<std::size_t> members;  // local indices, sorted
  double weight = 0.0;
};

/// Exact max-weight selection of node-disjoint candidates (branch and bound
/// with a suffix-sum bound; instances here are tiny).
std::vector<std::size_t> pick_disjoint(const std::vector<Candidate>& candidates,
                                       std::size_t node_count) {
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return candidates[x].weight > candidates[y].weight;
  });

  std::vector<double> suffix(candidates.size() + 1, 0.0);
  for (std::size_t i = candidates.size(); i-- > 0;) {
    suffix[i] = suffix[i + 1] + candidates[order[i]].weight;
  }

  std::vector<char> used(node_count, 0);
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  double best_weight = 0.0;

  const auto disjoint = [&](const Candidate& c) {
    return std::none_of(c.members.begin(), c.members.end(),
                        [&](std::size_t m) { return used[m] != 0; });
  };

  const std::function<void(std::size_t, double)> visit = [&](std::size_t i, double acc) {
    if (acc > best_weight) {
      best_weight = acc;
      best = current;
    }
    if (i == order.size() || acc + suffix[i] <= best_weight) return;
    const Candidate& c = candidates[order[i]];
    if (disjoint(c)) {
      for (const std::size_t m : c.members) used[m] = 1;
      current.push_back(order[i]);
      visit(i + 1, acc + c.weight);
      current.pop_back();
      for (const std::size_t m : c.members) used[m] = 0;
    }
    visit(i + 1, acc);
  };
  visit(0, 0.0);
  return best;
}

}  // namespace

MatchList distribution_match(const Table& source, const Table& target,
                             const DistributionParams& params, const MatchLimits& limits) {
  for (const double p : {params.phase1_theta, params.phase2_theta}) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("thresholds must be in [0, 1]");
  }
  if (params.max_bins == 0) throw std::invalid_argument("max_bins must be positive");
  if (source.column_count() == 0 || target.column_count() == 0) {
    throw std::invalid_argument("both tables need at least one column");
  }

  // Columns with no values carry no distributional evidence and stay out.
  std::vector<ColumnNode> nodes;
  const auto add_nodes = [&](const Table& table, bool from_source) {
    for (const Column& c : table.columns()) {
      ColumnNode node{from_source, &c, c.non_null_values(), {}, c.kind() == DataKind::numeric};
      if (node.raws.empty()) continue;
      std::sort(node.raws.begin(), node.raws.end());
      if (node.numeric) {
        node.numbers = c.numeric_values();
        std::sort(node.numbers.begin(), node.numbers.end());
      }
      nodes.push_back(std::move(node));
    }
  };
  add_nodes(source, true);
  add_nodes(target, false);

  MatchList out;
  const std::size_t n = nodes.size();
  if (n == 0) {
    out.finalize();
    return out;
  }

  // Phase 1: all-pairs EMD, candidate clusters = components of {emd <= theta1}.
  std::vector<double> phase1(n * n, 0.0);
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    limits.check();
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = node_pair_emd(nodes[i], nodes[j], params.max_bins);
      phase1[i * n + j] = phase1[j * n + i] = d;
      if (d <= params.phase1_theta) uf.unite(i, j);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < n; ++i) components[uf.find(i)].push_back(i);

  for (const auto& [root, member_list] : components) {
    limits.check();
    const std::size_t k = member_list.size();
    if (k < 2) continue;

    // The cluster's pool: values held by at least two member columns.
    std::map<std::string, std::size_t> holders;
    for (const std::size_t idx : member_list) {
      const auto& raws = nodes[idx].raws;
      for (std::size_t i = 0; i < raws.size(); ++i) {
        if (i == 0 || raws[i] != raws[i - 1]) ++holders[raws[i]];
      }
    }
    std::set<std::string> pool;
    for (const auto& [value, count] : holders) {
      if (count >= 2) pool.insert(value);
    }

    std::vector<std::vector<std::string>> restricted(k);
    for (std::size_t li = 0; li < k; ++li) {
      for (const auto& v : nodes[member_list[li]].raws) {
        if (pool.count(v)) restricted[li].push_back(v);
      }
    }

    // Phase 2: EMD over the pool-restricted values.
    std::vector<double> refined(k * k, kNoLink);
    for (std::size_t li = 0; li < k; ++li) {
      limits.check();
      for (std::size_t lj = li + 1; lj < k; ++lj) {
        if (restricted[li].empty() || restricted[lj].empty()) continue;
        const ColumnNode& a = nodes[member_list[li]];
        const ColumnNode& b = nodes[member_list[lj]];
        double d = kNoLink;
        if (a.numeric && b.numeric) {
          std::vector<double> na;
          std::vector<double> nb;
          for (const auto& v : restricted[li]) {
            if (const auto num = parse_number(v)) na.push_back(*num);
          }
          for (const auto& v : restricted[lj]) {
            if (const auto num = parse_number(v)) nb.push_back(*num);
          }
          if (!na.empty() && !nb.empty()) d = numeric_pair_emd(na, nb, params.max_bins);
        } else {
          d = textual_pair_emd(restricted[li], restricted[lj], params.max_bins);
        }
        refined[li * k + lj] = refined[lj * k + li] = d;
      }
    }

    // Candidate sub-clusters: closed neighborhoods and connected components
    // of the refined link graph.
    const auto linked = [&](std::size_t li, std::size_t lj) {
      return refined[li * k + lj] <= params.phase2_theta;
    };
    std::set<std::vector<std::size_t>> candidate_sets;
    for (std::size_t li = 0; li < k; ++li) {
      std::vector<std::size_t> star{li};
      for (std::size_t lj = 0; lj < k; ++lj) {
        if (lj != li && linked(li, lj)) star.push_back(lj);
      }
      if (star.size() < 2) continue;
      std::sort(star.begin(), star.end());
      candidate_sets.insert(std::move(star));
    }
    UnionFind sub(k);
    for (std::size_t li = 0; li < k; ++li) {
      for (std::size_t lj = li + 1; lj < k; ++lj) {
        if (linked(li, lj)) sub.unite(li, lj);
      }
    }
    std::map<std::size_t, std::vector<std::size_t>> sub_components;
    for (std::size_t li = 0; li < k; ++li) sub_components[sub.find(li)].push_back(li);
    for (const auto& [sub_root, sub_members] : sub_components) {
      if (sub_members.size() >= 2) candidate_sets.insert(sub_members);
    }

    std::vector<Candidate> candidates;
    candidates.reserve(candidate_sets.size());
    for (const auto& members : candidate_sets) {
      Candidate c{members, 0.0};
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          if (linked(members[x], members[y])) {
            c.weight += 1.0 - refined[members[x] * k + members[y]];
          }
        }
      }
      if (c.weight > 0.0) candidates.push_back(std::move(c));
    }

    // Emit cross-table pairs inside the selected clusters.
    for (const std::size_t chosen : pick_disjoint(candidates, k)) {
      const Candidate& cluster = candidates[chosen];
      for (std::size_t x = 0; x < cluster.members.size(); ++x) {
        for (std::size_t y = 0; y < cluster.members.size(); ++y) {
          const ColumnNode& a = nodes[member_list[cluster.members[x]]];
          const ColumnNode& b = nodes[member_list[cluster.members[y]]];
          if (!a.from_source || b.from_source) continue;
          double d = refined[cluster.members[x] * k + cluster.members[y]];
          if (!std::isfinite(d)) {
            d = phase1[member_list[cluster.members[x]] * n + member_list[cluster.members[y]]];
          }
          out.entries.push_back({a.column->id(), a.column->name(), b.column->id(),
                                 b.column->name(), 1.0 - std::clamp(d, 0.0, 1.0)});
        }
      }
    }
  }

  out.finalize();
  return out;
}

}  // namespace matchbench
