#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "totalcolor/error.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

/// Vertex and edge color assignment. Color ids are 1-based; 0 means
/// "unassigned" for a vertex.
class TotalColoring {
 public:
  TotalColoring() = default;
  explicit TotalColoring(int n) : n_(n), vertex_(n, 0) {}

  int n() const { return n_; }

  void set_vertex(int v, int color) {
    check_vertex(v);
    if (color < 1) throw PreconditionError("color ids are positive");
    vertex_[v] = color;
  }

  void set_edge(int a, int b, int color) {
    check_vertex(a);
    check_vertex(b);
    if (color < 1) throw PreconditionError("color ids are positive");
    edge_[make_edge(a, b)] = color;
  }

  /// 0 when unassigned.
  int vertex(int v) const { return vertex_[v]; }

  std::optional<int> edge(int a, int b) const {
    auto it = edge_.find(make_edge(a, b));
    if (it == edge_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<int>& vertex_colors() const { return vertex_; }
  const std::map<Edge, int>& edge_colors() const { return edge_; }

  /// Copies every assignment of `other` into this coloring.
  void merge(const TotalColoring& other) {
    if (other.n_ != n_) throw PreconditionError("merge: vertex counts differ");
    for (int v = 0; v < n_; ++v)
      if (other.vertex_[v] != 0) vertex_[v] = other.vertex_[v];
    for (const auto& [e, c] : other.edge_) edge_[e] = c;
  }

  bool operator==(const TotalColoring&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }

  int n_ = 0;
  std::vector<int> vertex_;
  std::map<Edge, int> edge_;
};

inline int color_count(const TotalColoring& c) {
  std::set<int> used;
  for (int x : c.vertex_colors())
    if (x != 0) used.insert(x);
  for (const auto& [e, x] : c.edge_colors()) used.insert(x);
  return static_cast<int>(used.size());
}

/// Adjacent vertices u < v share a color.
struct VertexVertexConflict {
  int u = 0;
  int v = 0;
  auto operator<=>(const VertexVertexConflict&) const = default;
};

/// Two edges meeting at `shared` share a color; first < second.
struct EdgeEdgeConflict {
  Edge first;
  Edge second;
  int shared = 0;
  auto operator<=>(const EdgeEdgeConflict&) const = default;
};

/// Edge incident to `vertex` carries the vertex's color.
struct VertexEdgeConflict {
  int vertex = 0;
  Edge edge;
  auto operator<=>(const VertexEdgeConflict&) const = default;
};

using Conflict = std::variant<VertexVertexConflict, EdgeEdgeConflict, VertexEdgeConflict>;

struct CoverageIssue {
  enum class Kind { MissingVertex, MissingEdge, NonEdgeColored, VertexCountMismatch };
  Kind kind;
  int vertex = -1;
  Edge edge{};
  auto operator<=>(const CoverageIssue&) const = default;
};

struct VerificationReport {
  std::vector<Conflict> conflicts;       // sorted
  std::vector<CoverageIssue> coverage;   // sorted
  int colors_used = 0;

  bool ok() const { return conflicts.empty() && coverage.empty(); }
};

inline std::string describe(const Conflict& c) {
  struct Visitor {
    std::string operator()(const VertexVertexConflict& x) const {
      return "VertexVertex(" + std::to_string(x.u) + "," + std::to_string(x.v) + ")";
    }
    std::string operator()(const EdgeEdgeConflict& x) const {
      return "EdgeEdge({" + std::to_string(x.first.u) + "," + std::to_string(x.first.v) + "},{" +
             std::to_string(x.second.u) + "," + std::to_string(x.second.v) + "}," + std::to_string(x.shared) + ")";
    }
    std::string operator()(const VertexEdgeConflict& x) const {
      return "VertexEdge(" + std::to_string(x.vertex) + ",{" + std::to_string(x.edge.u) + "," +
             std::to_string(x.edge.v) + "})";
    }
  };
  return std::visit(Visitor{}, c);
}

inline std::string describe(const CoverageIssue& c) {
  auto edge = [&] { return "{" + std::to_string(c.edge.u) + "," + std::to_string(c.edge.v) + "}"; };
  switch (c.kind) {
    case CoverageIssue::Kind::MissingVertex: return "MissingVertex(" + std::to_string(c.vertex) + ")";
    case CoverageIssue::Kind::MissingEdge: return "MissingEdge(" + edge() + ")";
    case CoverageIssue::Kind::NonEdgeColored: return "NonEdgeColored(" + edge() + ")";
    case CoverageIssue::Kind::VertexCountMismatch: return "VertexCountMismatch";
  }
  return "?";
}

/// Exhaustive check of a total coloring against `g`. Every conflict is listed,
/// in lexicographic order of conflict kind then key.
inline VerificationReport verify_total(const Graph& g, const TotalColoring& c) {
  VerificationReport report;
  report.colors_used = color_count(c);
  if (c.n() != g.n()) {
    report.coverage.push_back({CoverageIssue::Kind::VertexCountMismatch});
    return report;
  }
  for (int v = 0; v < g.n(); ++v)
    if (c.vertex(v) == 0) report.coverage.push_back({CoverageIssue::Kind::MissingVertex, v});
  for (const Edge& e : g.edges())
    if (!c.edge(e.u, e.v)) report.coverage.push_back({CoverageIssue::Kind::MissingEdge, -1, e});
  for (const auto& [e, color] : c.edge_colors())
    if (!g.adjacent(e.u, e.v)) report.coverage.push_back({CoverageIssue::Kind::NonEdgeColored, -1, e});

  for (const Edge& e : g.edges()) {
    if (c.vertex(e.u) != 0 && c.vertex(e.u) == c.vertex(e.v)) {
      report.conflicts.emplace_back(VertexVertexConflict{e.u, e.v});
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    std::vector<std::pair<int, Edge>> around;  // (color, edge)
    for (int u : g.neighbors(v)) {
      if (auto color = c.edge(u, v)) around.emplace_back(*color, make_edge(u, v));
    }
    std::sort(around.begin(), around.end());
    for (std::size_t i = 0; i < around.size(); ++i) {
      for (std::size_t j = i + 1; j < around.size() && around[j].first == around[i].first; ++j) {
        report.conflicts.emplace_back(EdgeEdgeConflict{around[i].second, around[j].second, v});
      }
      if (c.vertex(v) != 0 && around[i].first == c.vertex(v)) {
        report.conflicts.emplace_back(VertexEdgeConflict{v, around[i].second});
      }
    }
  }
  std::sort(report.conflicts.begin(), report.conflicts.end());
  std::sort(report.coverage.begin(), report.coverage.end());
  return report;
}

/// Ordered vertex classes; empty classes are allowed.
struct VertexPartition {
  std::vector<std::vector<int>> classes;

  bool operator==(const VertexPartition&) const = default;
};

/// Class i holds the vertices congruent to i modulo q.
inline VertexPartition residue_partition(int n, int q) {
  if (q < 1 || n < 0 || n % q != 0) {
    throw PreconditionError("residue_partition: " + std::to_string(q) + " does not divide " + std::to_string(n));
  }
  VertexPartition p;
  p.classes.resize(q);
  for (int v = 0; v < n; ++v) p.classes[v % q].push_back(v);
  return p;
}

inline VertexPartition partition_from_colors(const TotalColoring& c) {
  int top = 0;
  for (int x : c.vertex_colors()) top = std::max(top, x);
  VertexPartition p;
  p.classes.resize(top);
  for (int v = 0; v < c.n(); ++v)
    if (c.vertex(v) > 0) p.classes[c.vertex(v) - 1].push_back(v);
  return p;
}

struct IndependentClasses {};

/// Exactly q independent classes whose sizes all share the parity of n.
struct ConformableClasses {
  int q = 0;
};

using PartitionMode = std::variant<IndependentClasses, ConformableClasses>;

/// False as well when `p` is not a partition of the vertex set of `g`.
inline bool check_partition(const Graph& g, const VertexPartition& p, PartitionMode mode) {
  if (std::holds_alternative<ConformableClasses>(mode) && !g.regular_degree()) {
    throw PreconditionError("conformable check requires a regular graph");
  }
  std::vector<int> owner(g.n(), -1);
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    for (int v : p.classes[i]) {
      if (v < 0 || v >= g.n() || owner[v] >= 0) return false;
      owner[v] = static_cast<int>(i);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return false;
  for (const auto& cls : p.classes)
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b)
        if (g.adjacent(cls[a], cls[b])) return false;
  if (const auto* conf = std::get_if<ConformableClasses>(&mode)) {
    if (static_cast<int>(p.classes.size()) != conf->q) return false;
    for (const auto& cls : p.classes)
      if (static_cast<int>(cls.size() % 2) != g.n() % 2) return false;
  }
  return true;
}

/// n x n grid; diagonal = vertex colors, (i, j) = color of edge {i, j}, 0 = blank.
struct TotalColorMatrix {
  int n = 0;
  std::vector<int> cells;

  explicit TotalColorMatrix(int size = 0) : n(size), cells(static_cast<std::size_t>(size) * size, 0) {}

  int& at(int i, int j) { return cells[static_cast<std::size_t>(i) * n + j]; }
  int at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }

  bool operator==(const TotalColorMatrix&) const = default;
};

/// Renders whatever is assigned, without coverage checks (partial colorings
/// render with blanks).
inline TotalColorMatrix to_matrix(const TotalColoring& c) {
  TotalColorMatrix m(c.n());
  for (int v = 0; v < c.n(); ++v) m.at(v, v) = c.vertex(v);
  for (const auto& [e, color] : c.edge_colors()) {
    m.at(e.u, e.v) = color;
    m.at(e.v, e.u) = color;
  }
  return m;
}

inline TotalColorMatrix render_matrix(const Graph& g, const TotalColoring& c) {
  const auto report = verify_total(g, c);
  if (!report.coverage.empty()) {
    throw PreconditionError("render_matrix: coloring does not cover the graph (" + describe(report.coverage.front()) +
                            ")");
  }
  return to_matrix(c);
}

inline TotalColoring parse_matrix(const TotalColorMatrix& m) {
  TotalColoring c(m.n);
  for (int i = 0; i < m.n; ++i) {
    if (m.at(i, i) < 0) throw FormatError("negative color in matrix");
    if (m.at(i, i) > 0) c.set_vertex(i, m.at(i, i));
    for (int j = i + 1; j < m.n; ++j) {
      if (m.at(i, j) != m.at(j, i)) {
        throw FormatError("matrix not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (m.at(i, j) < 0) throw FormatError("negative color in matrix");
      if (m.at(i, j) > 0) c.set_edge(i, j, m.at(i, j));
    }
  }
  return c;
}

/// As above, additionally rejecting colored cells where `g` has no edge.
inline TotalColoring parse_matrix(const TotalColorMatrix& m, const Graph& g) {
  if (m.n != g.n()) throw FormatError("matrix size does not match the graph");
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (i != j && m.at(i, j) != 0 && !g.adjacent(i, j)) {
        throw FormatError("colored cell (" + std::to_string(i) + "," + std::to_string(j) + ") on a non-edge");
      }
  return parse_matrix(m);
}

}  // namespace totalcolor
