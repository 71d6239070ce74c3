#pragma once

#include <optional>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "totalcolor/graph.hpp"

namespace totalcolor {

struct Matching {
  std::vector<Edge> edges;  // lexicographic

  /// Edges of `g`, pairwise vertex-disjoint.
  bool valid_in(const Graph& g) const {
    std::vector<char> used(g.n(), 0);
    for (const Edge& e : edges) {
      if (!g.adjacent(e.u, e.v) || used[e.u] || used[e.v]) return false;
      used[e.u] = used[e.v] = 1;
    }
    return true;
  }

  bool perfect_for(const Graph& g) const { return valid_in(g) && 2 * static_cast<int>(edges.size()) == g.n(); }
};

/// Maximum-cardinality matching by Edmonds' blossom algorithm (Boost.Graph).
inline Matching maximum_matching(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using Vertex = boost::graph_traits<BoostGraph>::vertex_descriptor;
  BoostGraph bg(static_cast<std::size_t>(g.n()));
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<Vertex> mate(g.n());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  Matching m;
  const Vertex none = boost::graph_traits<BoostGraph>::null_vertex();
  for (int v = 0; v < g.n(); ++v) {
    if (mate[v] != none && static_cast<int>(mate[v]) > v) m.edges.push_back({v, static_cast<int>(mate[v])});
  }
  return m;
}

inline std::optional<Matching> perfect_matching(const Graph& g) {
  if (g.n() % 2 != 0) return std::nullopt;
  if (g.n() == 0) return Matching{};
  Matching m = maximum_matching(g);
  if (!m.perfect_for(g)) return std::nullopt;
  return m;
}

}  // namespace totalcolor
