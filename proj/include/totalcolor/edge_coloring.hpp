#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edge_coloring.hpp>
#include <boost/graph/properties.hpp>

#include "totalcolor/error.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

/// Proper edge coloring with 1-based colors.
struct EdgeColoring {
  std::map<Edge, int> color;
  int colors_used = 0;
  bool achieved_max_degree = false;  // colors_used <= max degree (class I witness)
};

inline bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& ec) {
  if (static_cast<int>(ec.color.size()) != g.edge_count()) return false;
  std::vector<std::set<int>> seen(g.n());
  for (const auto& [e, c] : ec.color) {
    if (!g.adjacent(e.u, e.v) || c < 1) return false;
    if (!seen[e.u].insert(c).second || !seen[e.v].insert(c).second) return false;
  }
  return true;
}

namespace detail {

inline void finish(EdgeColoring& ec, int max_degree) {
  std::set<int> used;
  for (const auto& [e, c] : ec.color) used.insert(c);
  ec.colors_used = static_cast<int>(used.size());
  ec.achieved_max_degree = ec.colors_used <= max_degree;
}

// Tries to move every edge of the rarest color class into 1..Delta by Kempe
// chain interchanges. Edges that cannot be moved keep color Delta + 1, so
// the coloring stays proper either way.
inline void drop_extra_color(const Graph& g, EdgeColoring& ec) {
  const int delta = g.max_degree();
  std::map<int, int> sizes;
  for (const auto& [e, c] : ec.color) ++sizes[c];
  if (static_cast<int>(sizes.size()) <= delta) return;
  int extra = sizes.begin()->first;
  for (const auto& [c, count] : sizes)
    if (count < sizes[extra]) extra = c;
  std::map<int, int> relabel;
  int next = 1;
  for (const auto& [c, count] : sizes) relabel[c] = c == extra ? delta + 1 : next++;
  for (auto& [e, c] : ec.color) c = relabel[c];

  std::vector<std::vector<int>> via(g.n(), std::vector<int>(delta + 2, -1));
  std::vector<Edge> pending;
  for (const auto& [e, c] : ec.color) {
    if (c == delta + 1) {
      pending.push_back(e);
      continue;
    }
    via[e.u][c] = e.v;
    via[e.v][c] = e.u;
  }
  auto chain = [&](int start, int a, int b) {
    std::vector<int> path{start};
    int x = start, want = a;
    while (via[x][want] >= 0) {
      x = via[x][want];
      path.push_back(x);
      want = want == a ? b : a;
    }
    return path;
  };
  auto swap_chain = [&](const std::vector<int>& path, int a, int b) {
    std::vector<int> old;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      old.push_back(i % 2 == 0 ? a : b);
      via[path[i]][old.back()] = -1;
      via[path[i + 1]][old.back()] = -1;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const int c = old[i] == a ? b : a;
      via[path[i]][c] = path[i + 1];
      via[path[i + 1]][c] = path[i];
    }
  };
  for (const Edge& e : pending) {
    const int u = e.u, v = e.v;
    int placed = 0;
    for (int c = 1; c <= delta && !placed; ++c)
      if (via[u][c] < 0 && via[v][c] < 0) placed = c;
    for (int a = 1; a <= delta && !placed; ++a) {
      if (via[u][a] >= 0) continue;
      for (int b = 1; b <= delta && !placed; ++b) {
        if (via[v][b] >= 0 || b == a) continue;
        const auto path = chain(v, a, b);
        if (std::find(path.begin(), path.end(), u) != path.end()) continue;
        swap_chain(path, a, b);
        placed = a;
      }
    }
    if (!placed) {
      via[u][delta + 1] = v;
      via[v][delta + 1] = u;
      continue;
    }
    via[u][placed] = v;
    via[v][placed] = u;
  }
  ec.color.clear();
  for (int v = 0; v < g.n(); ++v)
    for (int c = 1; c <= delta + 1; ++c)
      if (via[v][c] > v) ec.color[{v, via[v][c]}] = c;
  finish(ec, delta);
}

}  // namespace detail

/// Delta-edge-coloring of a bipartite graph. Each edge uv takes a color a
/// free at u; if a is busy at v, the a/b alternating path from v (b free at
/// v) is swapped first. Bipartiteness keeps that path away from u.
inline EdgeColoring edge_color_bipartite(const Graph& g) {
  if (!bipartition(g)) throw PreconditionError("edge_color_bipartite: graph is not bipartite");
  const int delta = g.max_degree();
  // via[v][c] = neighbor joined to v by color c, or -1
  std::vector<std::vector<int>> via(g.n(), std::vector<int>(delta + 1, -1));
  auto free_at = [&](int v) {
    for (int c = 1; c <= delta; ++c)
      if (via[v][c] < 0) return c;
    throw ConstructionError("edge_color_bipartite: no free color (degree bound violated)");
  };
  for (const Edge& e : g.edges()) {
    const int u = e.u, v = e.v;
    const int a = free_at(u);
    if (via[v][a] >= 0) {
      const int b = free_at(v);
      std::vector<int> path{v};
      int x = v, want = a;
      while (via[x][want] >= 0) {
        x = via[x][want];
        path.push_back(x);
        want = want == a ? b : a;
      }
      // Clear then re-add the path's edges with colors exchanged.
      std::vector<int> old_colors;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int c = i % 2 == 0 ? a : b;
        old_colors.push_back(c);
        via[path[i]][c] = -1;
        via[path[i + 1]][c] = -1;
      }
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int c = old_colors[i] == a ? b : a;
        via[path[i]][c] = path[i + 1];
        via[path[i + 1]][c] = path[i];
      }
    }
    via[u][a] = v;
    via[v][a] = u;
  }
  EdgeColoring ec;
  for (int v = 0; v < g.n(); ++v)
    for (int c = 1; c <= delta; ++c)
      if (via[v][c] > v) ec.color[{v, via[v][c]}] = c;
  detail::finish(ec, delta);
  return ec;
}

/// At most Delta + 1 colors by Misra-Gries fan recoloring (Boost.Graph),
/// followed by a Kempe chain pass that tries to empty one color class.
inline EdgeColoring edge_color_vizing(const Graph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property, std::size_t>;
  BoostGraph bg(static_cast<std::size_t>(g.n()));
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  boost::edge_coloring(bg, boost::get(boost::edge_bundle, bg));
  EdgeColoring ec;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) {
    const int a = static_cast<int>(boost::source(*it, bg));
    const int b = static_cast<int>(boost::target(*it, bg));
    ec.color[make_edge(a, b)] = static_cast<int>(bg[*it]) + 1;
  }
  detail::finish(ec, g.max_degree());
  detail::drop_extra_color(g, ec);
  if (!is_proper_edge_coloring(g, ec) || ec.colors_used > g.max_degree() + 1) {
    throw ConstructionError("edge_color_vizing: fan recoloring produced an invalid coloring");
  }
  return ec;
}

}  // namespace totalcolor
