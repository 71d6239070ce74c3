#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "totalcolor/arith.hpp"
#include "totalcolor/error.hpp"

namespace totalcolor {

/// Unordered vertex pair stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) {
  if (a == b) throw PreconditionError("self-loop " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

inline bool incident(const Edge& e, int v) { return e.u == v || e.v == v; }

/// Vertex count plus a symmetric, identity-free connection set over Z_n.
/// The set is stored sorted with both s and n - s present.
class CirculantSpec {
 public:
  CirculantSpec(int n, std::vector<int> connection) : n_(n), connection_(std::move(connection)) {
    if (n_ < 1) throw PreconditionError("circulant: n must be positive");
    std::sort(connection_.begin(), connection_.end());
    connection_.erase(std::unique(connection_.begin(), connection_.end()), connection_.end());
    for (int s : connection_) {
      if (s == 0 || s == n_) throw PreconditionError("circulant: connection set contains the identity 0");
      if (s < 0 || s > n_) throw PreconditionError("circulant: element " + std::to_string(s) + " outside 1..n-1");
    }
    for (int s : connection_) {
      if (!contains(n_ - s)) {
        throw PreconditionError("circulant: connection set not symmetric (" + std::to_string(s) + " present, " +
                                std::to_string(n_ - s) + " missing)");
      }
    }
  }

  int n() const { return n_; }
  const std::vector<int>& connection() const { return connection_; }
  int degree() const { return static_cast<int>(connection_.size()); }

  bool contains(int s) const { return std::binary_search(connection_.begin(), connection_.end(), mod(s, n_)); }

  /// Representatives s <= n/2, one per inverse pair.
  std::vector<int> half_set() const {
    std::vector<int> half;
    for (int s : connection_) {
      if (2 * s <= n_) half.push_back(s);
    }
    return half;
  }

  bool operator==(const CirculantSpec&) const = default;

 private:
  int n_;
  std::vector<int> connection_;
};

/// Multiplication table of a finite group on elements 0..n-1.
class GroupTable {
 public:
  static constexpr int kAssociativityCheckLimit = 64;

  GroupTable(int n, std::vector<int> product) : n_(n), product_(std::move(product)) {
    if (n_ < 1) throw PreconditionError("group table: order must be positive");
    if (product_.size() != static_cast<std::size_t>(n_) * n_) {
      throw PreconditionError("group table: expected " + std::to_string(n_ * n_) + " entries");
    }
    for (int x : product_) {
      if (x < 0 || x >= n_) throw PreconditionError("group table: not closed (entry " + std::to_string(x) + ")");
    }
    identity_ = -1;
    for (int e = 0; e < n_ && identity_ < 0; ++e) {
      bool ok = true;
      for (int g = 0; g < n_ && ok; ++g) ok = at(e, g) == g && at(g, e) == g;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw PreconditionError("group table: no identity element");
    inverse_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
      for (int h = 0; h < n_; ++h) {
        if (at(g, h) == identity_ && at(h, g) == identity_) {
          inverse_[g] = h;
          break;
        }
      }
      if (inverse_[g] < 0) throw PreconditionError("group table: element " + std::to_string(g) + " has no inverse");
    }
    if (n_ <= kAssociativityCheckLimit) {
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          for (int c = 0; c < n_; ++c)
            if (at(at(a, b), c) != at(a, at(b, c))) throw PreconditionError("group table: not associative");
    } else {
      std::clog << "warning: group of order " << n_ << " exceeds " << kAssociativityCheckLimit
                << "; associativity not checked\n";
    }
  }

  static GroupTable cyclic(int n) {
    std::vector<int> product(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) product[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return GroupTable(n, std::move(product));
  }

  /// Dihedral group of order 2k: rotations 0..k-1, reflections k..2k-1.
  static GroupTable dihedral(int k) {
    const int n = 2 * k;
    std::vector<int> product(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int z = 0;
        if (x < k && y < k) z = (x + y) % k;
        else if (x < k) z = (y - k + x) % k + k;
        else if (y < k) z = mod(x - k - y, k) + k;
        else z = mod(x - y, k);
        product[static_cast<std::size_t>(x) * n + y] = z;
      }
    }
    return GroupTable(n, std::move(product));
  }

  int order() const { return n_; }
  int identity() const { return identity_; }
  int at(int a, int b) const { return product_[static_cast<std::size_t>(a) * n_ + b]; }
  int inverse(int g) const { return inverse_[g]; }
  const std::vector<int>& product() const { return product_; }

  bool operator==(const GroupTable& other) const { return n_ == other.n_ && product_ == other.product_; }

 private:
  int n_;
  std::vector<int> product_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

struct CayleyOrigin {
  GroupTable table;
  std::vector<int> generators;

  bool operator==(const CayleyOrigin&) const = default;
};

using GraphOrigin = std::variant<std::monostate, CirculantSpec, CayleyOrigin>;

/// Simple undirected graph on vertices 0..n-1 with a dense bit adjacency
/// matrix. Immutable once built.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::span<const Edge> edges, GraphOrigin origin = {}) : n_(n), origin_(std::move(origin)) {
    if (n_ < 0) throw PreconditionError("graph: negative vertex count");
    words_ = (n_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    degree_.assign(n_, 0);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) throw PreconditionError("graph: edge endpoint out of range");
      if (e.u == e.v) throw PreconditionError("graph: self-loop at " + std::to_string(e.u));
      if (adjacent(e.u, e.v)) continue;
      set_bit(e.u, e.v);
      set_bit(e.v, e.u);
      ++degree_[e.u];
      ++degree_[e.v];
      ++edge_count_;
    }
  }

  int n() const { return n_; }
  int edge_count() const { return edge_count_; }
  const GraphOrigin& origin() const { return origin_; }

  const CirculantSpec* circulant() const { return std::get_if<CirculantSpec>(&origin_); }
  const CayleyOrigin* cayley() const { return std::get_if<CayleyOrigin>(&origin_); }

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
  }

  int degree(int v) const { return degree_[v]; }

  int max_degree() const { return n_ == 0 ? 0 : *std::max_element(degree_.begin(), degree_.end()); }

  std::optional<int> regular_degree() const {
    if (n_ == 0) return 0;
    const int d = degree_[0];
    for (int x : degree_)
      if (x != d) return std::nullopt;
    return d;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree_[v]);
    for (int u = 0; u < n_; ++u)
      if (adjacent(v, u)) out.push_back(u);
    return out;
  }

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.push_back({u, v});
    return out;
  }

  bool is_complete() const { return edge_count_ == n_ * (n_ - 1) / 2; }

  /// Adjacency equality; provenance is ignored.
  bool same_adjacency(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

 private:
  void set_bit(int u, int v) { bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  int n_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degree_;
  GraphOrigin origin_;
};

inline Graph build_circulant(const CirculantSpec& spec) {
  std::vector<Edge> edges;
  for (int u = 0; u < spec.n(); ++u) {
    for (int s : spec.connection()) {
      const int v = (u + s) % spec.n();
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph(spec.n(), edges, spec);
}

inline CirculantSpec unitary_spec(int n) {
  if (n < 2) throw PreconditionError("unitary Cayley graph needs n >= 2");
  return CirculantSpec(n, units_mod(n));
}

inline Graph build_unitary(int n) { return build_circulant(unitary_spec(n)); }

/// g ~ g*s for every group element g and generator s.
inline Graph build_cayley(const GroupTable& table, std::vector<int> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (int s : generators) {
    if (s < 0 || s >= table.order()) throw PreconditionError("cayley: generator outside the group");
    if (s == table.identity()) throw PreconditionError("cayley: generating set contains the identity");
  }
  for (int s : generators) {
    if (!std::binary_search(generators.begin(), generators.end(), table.inverse(s))) {
      throw PreconditionError("cayley: generating set not closed under inverses (" + std::to_string(s) + ")");
    }
  }
  std::vector<Edge> edges;
  for (int g = 0; g < table.order(); ++g) {
    for (int s : generators) {
      const int h = table.at(g, s);
      if (g < h) edges.push_back({g, h});
    }
  }
  return Graph(table.order(), edges, CayleyOrigin{table, generators});
}

inline Graph complete_graph(int n) {
  std::vector<int> all(n > 0 ? n - 1 : 0);
  std::iota(all.begin(), all.end(), 1);
  if (n == 0) return Graph(0, {});
  return build_circulant(CirculantSpec(n, all));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  return build_circulant(CirculantSpec(n, {1, n - 1}));
}

/// K_{m,m} with left side 0..m-1 and right side m..2m-1.
inline Graph complete_bipartite(int m) {
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) edges.push_back({i, m + j});
  return Graph(2 * m, edges);
}

inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, edges);
}

/// Subgraph with the same vertex set and the given edges removed.
inline Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  return Graph(g.n(), kept);
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  GraphOrigin origin;
  if (const auto* spec = g.circulant()) {
    std::vector<int> rest;
    for (int s = 1; s < spec->n(); ++s)
      if (!spec->contains(s)) rest.push_back(s);
    origin = CirculantSpec(spec->n(), rest);
  } else if (const auto* cay = g.cayley()) {
    std::vector<int> rest;
    for (int s = 0; s < cay->table.order(); ++s) {
      if (s != cay->table.identity() && !std::binary_search(cay->generators.begin(), cay->generators.end(), s)) {
        rest.push_back(s);
      }
    }
    origin = CayleyOrigin{cay->table, rest};
  }
  return Graph(g.n(), edges, std::move(origin));
}

inline bool connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v = 0; v < g.n(); ++v) {
      if (!seen[v] && g.adjacent(u, v)) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == g.n();
}

struct Bipartition {
  std::vector<int> first;   // side containing the lowest vertex of each component
  std::vector<int> second;
};

/// BFS two-coloring; nullopt when an odd cycle exists.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  for (int root = 0; root < g.n(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v = 0; v < g.n(); ++v) {
        if (!g.adjacent(u, v)) continue;
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          frontier.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (int v = 0; v < g.n(); ++v) (side[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

/// Spanning 2-regular (or 1-regular, for s = n/2) subgraph generated by {s, n-s}.
struct TwoFactor {
  int generator = 0;
  bool is_matching = false;
  std::vector<std::vector<int>> cycles;  // each a vertex sequence starting at its least vertex
};

struct TwoFactorDecomposition {
  int n = 0;
  std::vector<TwoFactor> factors;
};

inline TwoFactorDecomposition two_factors(const CirculantSpec& spec) {
  TwoFactorDecomposition out{spec.n(), {}};
  for (int s : spec.half_set()) {
    TwoFactor factor;
    factor.generator = s;
    factor.is_matching = 2 * s == spec.n();
    const int g = std::gcd(spec.n(), s);
    const int length = spec.n() / g;
    for (int start = 0; start < g; ++start) {
      std::vector<int> cycle;
      for (int step = 0; step < length; ++step) cycle.push_back((start + step * s) % spec.n());
      factor.cycles.push_back(std::move(cycle));
    }
    out.factors.push_back(std::move(factor));
  }
  return out;
}

/// Edges of one factor in lexicographic order.
inline std::vector<Edge> factor_edges(const TwoFactor& factor) {
  std::vector<Edge> out;
  for (const auto& cycle : factor.cycles) {
    if (cycle.size() == 2) {
      out.push_back(make_edge(cycle[0], cycle[1]));
      continue;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) out.push_back(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace totalcolor
