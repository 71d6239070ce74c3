#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "totalcolor/error.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

struct CliqueCensus {
  std::vector<std::vector<int>> maximal;  // each sorted; list sorted lexicographically
  int omega = 0;
  std::size_t maximal_count = 0;
  std::size_t maximum_count = 0;

  std::vector<std::vector<int>> maximum() const {
    std::vector<std::vector<int>> out;
    for (const auto& q : maximal)
      if (static_cast<int>(q.size()) == omega) out.push_back(q);
    return out;
  }
};

namespace detail {

using VertexSet = boost::dynamic_bitset<>;

inline std::vector<VertexSet> neighbor_sets(const Graph& g) {
  std::vector<VertexSet> rows(g.n(), VertexSet(g.n()));
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v)
      if (g.adjacent(u, v)) rows[u].set(v);
  return rows;
}

// Bron-Kerbosch with Tomita pivoting: pivot maximizes |P ∩ N(u)| over P ∪ X.
inline void bron_kerbosch(const std::vector<VertexSet>& nbr, std::vector<int>& r, VertexSet p, VertexSet x,
                          std::vector<std::vector<int>>& out) {
  if (p.none()) {
    if (x.none()) {
      auto clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  const VertexSet px = p | x;
  std::size_t pivot = px.find_first();
  std::size_t best = (p & nbr[pivot]).count();
  for (auto u = px.find_next(pivot); u != VertexSet::npos; u = px.find_next(u)) {
    const std::size_t c = (p & nbr[u]).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  const VertexSet candidates = p - nbr[pivot];
  for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
    r.push_back(static_cast<int>(v));
    bron_kerbosch(nbr, r, p & nbr[v], x & nbr[v], out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

}  // namespace detail

inline CliqueCensus maximal_cliques(const Graph& g) {
  CliqueCensus census;
  if (g.n() == 0) return census;
  const auto nbr = detail::neighbor_sets(g);
  std::vector<int> r;
  detail::VertexSet p(g.n());
  p.set();
  detail::bron_kerbosch(nbr, r, p, detail::VertexSet(g.n()), census.maximal);
  std::sort(census.maximal.begin(), census.maximal.end());
  for (const auto& q : census.maximal) census.omega = std::max(census.omega, static_cast<int>(q.size()));
  census.maximal_count = census.maximal.size();
  census.maximum_count = static_cast<std::size_t>(
      std::count_if(census.maximal.begin(), census.maximal.end(),
                    [&](const auto& q) { return static_cast<int>(q.size()) == census.omega; }));
  return census;
}

inline bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.adjacent(vs[a], vs[b])) return false;
  return true;
}

/// n / omega vertex-disjoint maximum cliques covering every vertex.
struct CliqueCover {
  std::vector<std::vector<int>> cliques;
};

/// Exact cover of V by maximum cliques: the least uncovered vertex must lie
/// in one of the chosen cliques. Throws when omega does not divide n.
inline std::optional<CliqueCover> clique_cover_disjoint(const Graph& g) {
  if (g.n() == 0) return CliqueCover{};
  const auto census = maximal_cliques(g);
  if (g.n() % census.omega != 0) {
    throw PreconditionError("clique_cover_disjoint: clique number " + std::to_string(census.omega) +
                            " does not divide " + std::to_string(g.n()));
  }
  const auto maximum = census.maximum();
  std::vector<std::vector<std::size_t>> containing(g.n());
  for (std::size_t i = 0; i < maximum.size(); ++i)
    for (int v : maximum[i]) containing[v].push_back(i);

  std::vector<char> covered(g.n(), 0);
  CliqueCover cover;
  auto solve = [&](auto&& self) -> bool {
    int v = 0;
    while (v < g.n() && covered[v]) ++v;
    if (v == g.n()) return true;
    for (std::size_t i : containing[v]) {
      const auto& q = maximum[i];
      if (std::any_of(q.begin(), q.end(), [&](int w) { return covered[w] != 0; })) continue;
      for (int w : q) covered[w] = 1;
      cover.cliques.push_back(q);
      if (self(self)) return true;
      cover.cliques.pop_back();
      for (int w : q) covered[w] = 0;
    }
    return false;
  };
  if (!solve(solve)) return std::nullopt;
  return cover;
}

}  // namespace totalcolor
