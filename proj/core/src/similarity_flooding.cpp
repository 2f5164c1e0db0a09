#include "matchbench/similarity_flooding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "matchbench/string_sim.hpp"

namespace matchbench {

namespace {

/// Directed labeled graph encoding one table's schema.
struct TableGraph {
  enum class Cat { table, column, name_lit, kind_lit };

  struct Node {
    Cat cat;
    std::string text;  // table name, column id, or literal value
  };
  struct Edge {
    std::string label;
    std::size_t from;
    std::size_t to;
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;
  // label -> node -> labeled degree
  std::map<std::string, std::map<std::size_t, std::size_t>> outdeg;
  std::map<std::string, std::map<std::size_t, std::size_t>> indeg;

  std::size_t add_node(Cat cat, std::string text) {
    nodes.push_back({cat, std::move(text)});
    return nodes.size() - 1;
  }
  void add_edge(std::string label, std::size_t from, std::size_t to) {
    ++outdeg[label][from];
    ++indeg[label][to];
    edges.push_back({std::move(label), from, to});
  }
};

TableGraph encode(const Table& table) {
  TableGraph g;
  const std::size_t table_node = g.add_node(TableGraph::Cat::table, table.name());

  std::map<std::string, std::size_t> name_literals;
  std::map<std::string, std::size_t> kind_literals;
  for (const Column& c : table.columns()) {
    const std::size_t col_node = g.add_node(TableGraph::Cat::column, c.id());
    g.add_edge("column", table_node, col_node);

    auto [name_it, name_new] = name_literals.try_emplace(c.name(), 0);
    if (name_new) name_it->second = g.add_node(TableGraph::Cat::name_lit, c.name());
    g.add_edge("name", col_node, name_it->second);

    const std::string kind(to_string(c.kind()));
    auto [kind_it, kind_new] = kind_literals.try_emplace(kind, 0);
    if (kind_new) kind_it->second = g.add_node(TableGraph::Cat::kind_lit, kind);
    g.add_edge("type", col_node, kind_it->second);
  }
  return g;
}

PropagationGraph::PairKind pair_kind(TableGraph::Cat cat) {
  switch (cat) {
    case TableGraph::Cat::table: return PropagationGraph::PairKind::tables;
    case TableGraph::Cat::column: return PropagationGraph::PairKind::columns;
    case TableGraph::Cat::name_lit: return PropagationGraph::PairKind::names;
    case TableGraph::Cat::kind_lit: return PropagationGraph::PairKind::kinds;
  }
  return PropagationGraph::PairKind::tables;
}

double seed_similarity(const TableGraph::Node& a, const TableGraph::Node& b) {
  if (a.cat == TableGraph::Cat::name_lit && b.cat == TableGraph::Cat::name_lit) {
    return normalized_string_sim(a.text, b.text);
  }
  if (a.cat == TableGraph::Cat::kind_lit && b.cat == TableGraph::Cat::kind_lit) {
    return a.text == b.text ? 1.0 : 0.0;
  }
  return 0.0;
}

}  // namespace

PropagationGraph PropagationGraph::build(const Table& source, const Table& target) {
  const TableGraph g1 = encode(source);
  const TableGraph g2 = encode(target);

  PropagationGraph pg;
  std::map<std::uint64_t, std::size_t> pair_index;
  const auto pair_node = [&](std::size_t n1, std::size_t n2) {
    const std::uint64_t key = static_cast<std::uint64_t>(n1) * g2.nodes.size() + n2;
    const auto it = pair_index.find(key);
    if (it != pair_index.end()) return it->second;
    const TableGraph::Node& a = g1.nodes[n1];
    const TableGraph::Node& b = g2.nodes[n2];
    pg.nodes.push_back({pair_kind(a.cat), a.text, b.text, seed_similarity(a, b)});
    pair_index.emplace(key, pg.nodes.size() - 1);
    return pg.nodes.size() - 1;
  };

  for (const auto& e1 : g1.edges) {
    for (const auto& e2 : g2.edges) {
      if (e1.label != e2.label) continue;
      const std::size_t from = pair_node(e1.from, e2.from);
      const std::size_t to = pair_node(e1.to, e2.to);
      const double forward =
          2.0 / static_cast<double>(g1.outdeg.at(e1.label).at(e1.from) +
                                    g2.outdeg.at(e2.label).at(e2.from));
      const double reverse =
          2.0 / static_cast<double>(g1.indeg.at(e1.label).at(e1.to) +
                                    g2.indeg.at(e2.label).at(e2.to));
      pg.arcs.push_back({from, to, e1.label, forward});
      pg.arcs.push_back({to, from, e1.label, reverse});
    }
  }
  return pg;
}

FloodResult similarity_flooding_flood(const Table& source, const Table& target, double epsilon,
                                      std::size_t max_iterations, const MatchLimits& limits) {
  if (source.column_count() == 0 || target.column_count() == 0) {
    throw std::invalid_argument("both tables need at least one column");
  }
  const PropagationGraph pg = PropagationGraph::build(source, target);
  const std::size_t n = pg.nodes.size();

  std::vector<double> seeds(n);
  for (std::size_t i = 0; i < n; ++i) seeds[i] = pg.nodes[i].seed;

  FloodResult result;
  std::vector<double> sigma = seeds;
  std::vector<double> u(n);
  std::vector<double> next(n);

  for (std::size_t it = 0; it < max_iterations; ++it) {
    limits.check();
    for (std::size_t i = 0; i < n; ++i) u[i] = seeds[i] + sigma[i];
    next = u;
    for (const auto& arc : pg.arcs) next[arc.to] += arc.weight * u[arc.from];

    const double peak = *std::max_element(next.begin(), next.end());
    if (peak > 0.0) {
      for (double& v : next) v /= peak;
    }

    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = next[i] - sigma[i];
      sq += d * d;
    }
    const double residual = std::sqrt(sq);
    result.residuals.push_back(residual);
    sigma.swap(next);
    ++result.iterations;
    if (residual < epsilon) {
      result.converged = true;
      break;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (pg.nodes[i].kind != PropagationGraph::PairKind::columns) continue;
    const Column* sc = source.find_column(pg.nodes[i].left);
    const Column* tc = target.find_column(pg.nodes[i].right);
    result.matches.entries.push_back({sc->id(), sc->name(), tc->id(), tc->name(), sigma[i]});
  }
  result.matches.finalize();
  return result;
}

MatchList similarity_flooding_match(const Table& source, const Table& target,
                                    const MatchLimits& limits) {
  return similarity_flooding_flood(source, target, kFloodEpsilon, kFloodMaxIterations, limits)
      .matches;
}

}  // namespace matchbench
