#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "totalcolor/cliques.hpp"
#include "totalcolor/coloring.hpp"
#include "totalcolor/error.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

/// Limits for the exact searches. Running out yields Inconclusive, never a
/// verdict.
struct SearchBudget {
  int max_colors = 63;
  std::uint64_t node_limit = 5'000'000'000ULL;
  double time_limit_secs = 600.0;
};

enum class SearchOutcome { Feasible, Infeasible, Inconclusive };

inline const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Feasible: return "feasible";
    case SearchOutcome::Infeasible: return "infeasible";
    case SearchOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// Items 0..size-1 with a symmetric conflict relation. `cliques` lists
/// known cliques; one whose size equals the color count must use every color
/// exactly once, which the search exploits.
struct ConflictGraph {
  std::vector<std::vector<int>> adjacent;
  std::vector<std::vector<int>> cliques;

  int size() const { return static_cast<int>(adjacent.size()); }
};

struct ColorSearchResult {
  SearchOutcome outcome = SearchOutcome::Inconclusive;
  std::vector<int> colors;  // 0-based, when feasible
  std::uint64_t nodes = 0;
};

namespace detail {

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds))) {}

  bool passed() const { return std::chrono::steady_clock::now() >= end_; }

 private:
  std::chrono::steady_clock::time_point end_;
};

// DSATUR branch and bound for a fixed color count. Ties on saturation break
// by static conflict degree (descending), then item index.
class DsaturSearch {
 public:
  DsaturSearch(const ConflictGraph& g, int colors, const SearchBudget& budget)
      : g_(g), k_(colors), budget_(budget), deadline_(budget.time_limit_secs),
        color_(g.size(), -1), forbid_count_(static_cast<std::size_t>(g.size()) * colors, 0), mask_(g.size(), 0) {
    order_.resize(g.size());
    for (int i = 0; i < g.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.adjacent[a].size() > g.adjacent[b].size(); });
    for (const auto& q : g.cliques)
      if (static_cast<int>(q.size()) == colors) tight_.push_back(&q);
  }

  ColorSearchResult run(std::span<const int> precolored_clique) {
    ColorSearchResult result;
    if (k_ > 64) throw PreconditionError("color search supports at most 64 colors");
    if (static_cast<int>(precolored_clique.size()) > k_) {
      result.outcome = SearchOutcome::Infeasible;
      return result;
    }
    for (std::size_t i = 0; i < precolored_clique.size(); ++i) assign(precolored_clique[i], static_cast<int>(i));
    max_used_ = static_cast<int>(precolored_clique.size()) - 1;
    uncolored_ = g_.size() - static_cast<int>(precolored_clique.size());
    const bool found = search();
    result.nodes = nodes_;
    if (found) {
      result.outcome = SearchOutcome::Feasible;
      result.colors = color_;
    } else {
      result.outcome = aborted_ ? SearchOutcome::Inconclusive : SearchOutcome::Infeasible;
    }
    return result;
  }

 private:
  void assign(int item, int c) {
    color_[item] = c;
    for (int j : g_.adjacent[item]) {
      if (forbid_count_[static_cast<std::size_t>(j) * k_ + c]++ == 0) mask_[j] |= std::uint64_t{1} << c;
    }
  }

  void unassign(int item) {
    const int c = color_[item];
    color_[item] = -1;
    for (int j : g_.adjacent[item]) {
      if (--forbid_count_[static_cast<std::size_t>(j) * k_ + c] == 0) mask_[j] &= ~(std::uint64_t{1} << c);
    }
  }

  bool out_of_budget() {
    if (nodes_ > budget_.node_limit) return true;
    if ((nodes_ & 0xFFF) == 0 && deadline_.passed()) return true;
    return false;
  }

  // Hidden singles: in a clique of exactly k items, a color with one possible
  // item must go there, and a color with none refutes the node. Only used
  // once every color is in play, so the first-use ordering is unaffected.
  bool propagate(std::vector<int>& forced) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto* q : tight_) {
        std::uint64_t used = 0;
        for (int item : *q)
          if (color_[item] >= 0) used |= std::uint64_t{1} << color_[item];
        for (int c = 0; c < k_; ++c) {
          if ((used >> c) & 1U) continue;
          int candidate = -1, count = 0;
          for (int item : *q) {
            if (color_[item] >= 0 || ((mask_[item] >> c) & 1U)) continue;
            candidate = item;
            if (++count > 1) break;
          }
          if (count == 0) return false;
          if (count == 1) {
            assign(candidate, c);
            --uncolored_;
            forced.push_back(candidate);
            used |= std::uint64_t{1} << c;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  bool search() {
    if (uncolored_ == 0) return true;
    ++nodes_;
    if (out_of_budget()) {
      aborted_ = true;
      return false;
    }
    std::vector<int> forced;
    const bool consistent = max_used_ < k_ - 1 || propagate(forced);
    if (consistent && branch()) return true;
    for (auto it = forced.rbegin(); it != forced.rend(); ++it) {
      unassign(*it);
      ++uncolored_;
    }
    return false;
  }

  bool branch() {
    if (uncolored_ == 0) return true;
    int pick = -1;
    int best = -1;
    for (int item : order_) {
      if (color_[item] >= 0) continue;
      const int sat = std::popcount(mask_[item]);
      if (sat > best) {
        best = sat;
        pick = item;
        if (sat == k_) break;
      }
    }
    if (max_used_ == k_ - 1 && best < k_) {
      const auto placed = branch_on_color(k_ - best);
      if (placed != Placement::NotTried) return placed == Placement::Found;
    }
    const int saved_max = max_used_;
    const int limit = std::min(k_ - 1, max_used_ + 1);
    for (int c = 0; c <= limit; ++c) {
      if ((mask_[pick] >> c) & 1U) continue;
      if (try_assign(pick, c, saved_max)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  bool try_assign(int item, int c, int saved_max) {
    assign(item, c);
    --uncolored_;
    max_used_ = std::max(saved_max, c);
    if (search()) return true;
    max_used_ = saved_max;
    ++uncolored_;
    unassign(item);
    return false;
  }

  enum class Placement { NotTried, Found, Exhausted };

  // Branches on where a color goes inside a tight clique when that has fewer
  // options than the most saturated item.
  Placement branch_on_color(int item_options) {
    const std::vector<int>* best_clique = nullptr;
    int best_color = -1;
    int best_count = item_options;
    for (const auto* q : tight_) {
      std::uint64_t used = 0;
      for (int item : *q)
        if (color_[item] >= 0) used |= std::uint64_t{1} << color_[item];
      for (int c = 0; c < k_; ++c) {
        if ((used >> c) & 1U) continue;
        int count = 0;
        for (int item : *q)
          if (color_[item] < 0 && !((mask_[item] >> c) & 1U)) ++count;
        if (count < best_count) {
          best_count = count;
          best_clique = q;
          best_color = c;
        }
      }
    }
    if (!best_clique) return Placement::NotTried;
    for (int item : *best_clique) {
      if (color_[item] >= 0 || ((mask_[item] >> best_color) & 1U)) continue;
      if (try_assign(item, best_color, max_used_)) return Placement::Found;
      if (aborted_) break;
    }
    return Placement::Exhausted;
  }

  const ConflictGraph& g_;
  int k_;
  SearchBudget budget_;
  Deadline deadline_;
  std::vector<int> color_;
  std::vector<int> forbid_count_;
  std::vector<std::uint64_t> mask_;
  std::vector<int> order_;
  std::vector<const std::vector<int>*> tight_;
  int max_used_ = -1;
  int uncolored_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

/// Decides whether the items can be colored with `colors` colors. The
/// clique, if given, is fixed to colors 0, 1, ... to break symmetry.
inline ColorSearchResult color_search(const ConflictGraph& g, int colors, std::span<const int> precolored_clique,
                                      const SearchBudget& budget) {
  return detail::DsaturSearch(g, colors, budget).run(precolored_clique);
}

/// Conflict structure of the total graph: items 0..n-1 are vertices, items
/// n.. are the edges of `g` in lexicographic order.
struct TotalGraph {
  ConflictGraph conflicts;
  std::vector<Edge> edges;
  int n = 0;

  explicit TotalGraph(const Graph& g) : edges(g.edges()), n(g.n()) {
    conflicts.adjacent.resize(n + edges.size());
    auto link = [&](int a, int b) {
      conflicts.adjacent[a].push_back(b);
      conflicts.adjacent[b].push_back(a);
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int item = n + static_cast<int>(i);
      link(edges[i].u, edges[i].v);
      link(edges[i].u, item);
      link(edges[i].v, item);
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const Edge& a = edges[i];
        const Edge& b = edges[j];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) link(item, n + static_cast<int>(j));
      }
    }
    conflicts.cliques.resize(n);
    for (int v = 0; v < n; ++v) conflicts.cliques[v].push_back(v);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      conflicts.cliques[edges[i].u].push_back(n + static_cast<int>(i));
      conflicts.cliques[edges[i].v].push_back(n + static_cast<int>(i));
    }
  }

  /// A vertex of maximum degree together with its incident edges.
  std::vector<int> max_star(const Graph& g) const {
    std::vector<int> star;
    if (n == 0) return star;
    int center = 0;
    for (int v = 1; v < n; ++v)
      if (g.degree(v) > g.degree(center)) center = v;
    star.push_back(center);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (incident(edges[i], center)) star.push_back(n + static_cast<int>(i));
    return star;
  }

  TotalColoring decode(const std::vector<int>& colors) const {
    TotalColoring c(n);
    for (int v = 0; v < n; ++v) c.set_vertex(v, colors[v] + 1);
    for (std::size_t i = 0; i < edges.size(); ++i) c.set_edge(edges[i].u, edges[i].v, colors[n + i] + 1);
    return c;
  }
};

struct TotalColorableResult {
  SearchOutcome outcome = SearchOutcome::Inconclusive;
  std::optional<TotalColoring> certificate;
  std::uint64_t nodes = 0;
};

/// Exhaustive decision: does `g` have a total coloring with `colors` colors?
inline TotalColorableResult total_colorable(const Graph& g, int colors, const SearchBudget& budget = {}) {
  const TotalGraph total(g);
  const auto star = total.max_star(g);
  const auto r = color_search(total.conflicts, colors, star, budget);
  TotalColorableResult out{r.outcome, std::nullopt, r.nodes};
  if (r.outcome == SearchOutcome::Feasible) out.certificate = total.decode(r.colors);
  return out;
}

struct ExactResult {
  bool exact = false;               // value is proven minimal
  int lower_bound = 0;              // every count below is refuted (or trivially impossible)
  std::optional<int> value;         // least feasible count found
  std::optional<TotalColoring> certificate;
  std::vector<int> refuted;         // counts proven infeasible by exhausted search
  std::uint64_t nodes = 0;
};

/// Least c admitting a total coloring, tried upward from Delta + 1.
inline ExactResult exact_total_chromatic(const Graph& g, const SearchBudget& budget = {}) {
  ExactResult out;
  out.lower_bound = g.n() == 0 ? 0 : g.max_degree() + 1;
  if (g.n() == 0) {
    out.exact = true;
    out.value = 0;
    out.certificate = TotalColoring(0);
    return out;
  }
  const detail::Deadline deadline(budget.time_limit_secs);
  for (int c = out.lower_bound; c <= budget.max_colors; ++c) {
    SearchBudget step = budget;
    step.node_limit = budget.node_limit > out.nodes ? budget.node_limit - out.nodes : 0;
    const auto r = total_colorable(g, c, step);
    out.nodes += r.nodes;
    if (r.outcome == SearchOutcome::Feasible) {
      out.value = c;
      out.certificate = r.certificate;
      out.exact = true;
      return out;
    }
    if (r.outcome == SearchOutcome::Inconclusive || deadline.passed()) return out;
    out.refuted.push_back(c);
    out.lower_bound = c + 1;
  }
  return out;
}

struct ChromaticResult {
  bool exact = false;
  std::optional<int> value;
  std::vector<int> coloring;  // 1-based vertex colors when exact
  std::uint64_t nodes = 0;
};

inline ChromaticResult exact_chromatic(const Graph& g, const SearchBudget& budget = {}) {
  ChromaticResult out;
  if (g.n() == 0) {
    out.exact = true;
    out.value = 0;
    return out;
  }
  ConflictGraph conflicts;
  conflicts.adjacent.resize(g.n());
  for (int v = 0; v < g.n(); ++v) conflicts.adjacent[v] = g.neighbors(v);
  const auto census = maximal_cliques(g);
  const auto clique = census.maximum().front();
  for (int c = census.omega; c <= std::min(budget.max_colors, g.n()); ++c) {
    const auto r = color_search(conflicts, c, clique, budget);
    out.nodes += r.nodes;
    if (r.outcome == SearchOutcome::Feasible) {
      out.exact = true;
      out.value = c;
      for (int x : r.colors) out.coloring.push_back(x + 1);
      return out;
    }
    if (r.outcome == SearchOutcome::Inconclusive) return out;
  }
  return out;
}

struct PerfectnessResult {
  std::optional<bool> perfect;            // nullopt: beyond the size limit
  std::vector<int> odd_hole;              // witness in g, if any
  std::vector<int> odd_antihole;          // witness (a hole of the complement), if any
};

namespace detail {

// Chordless cycle of odd length >= 5 through vertices >= its least vertex.
inline std::vector<int> find_odd_hole(const Graph& g) {
  std::vector<int> path;
  std::vector<int> found;
  auto extend = [&](auto&& self) -> bool {
    const int start = path.front();
    const int last = path.back();
    for (int w = start + 1; w < g.n(); ++w) {
      if (!g.adjacent(last, w) || std::find(path.begin(), path.end(), w) != path.end()) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(path[i], w);
      if (chord) continue;
      if (g.adjacent(start, w)) {
        // w closes the cycle; it cannot be extended past without a chord
        if (path.size() >= 2) {
          const std::size_t len = path.size() + 1;
          if (len >= 5 && len % 2 == 1) {
            found = path;
            found.push_back(w);
            return true;
          }
          continue;
        }
      }
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
    }
    return false;
  };
  for (int s = 0; s < g.n(); ++s) {
    path.assign(1, s);
    if (extend(extend)) return found;
  }
  return {};
}

}  // namespace detail

/// Odd-hole / odd-antihole test by exhaustive induced-cycle search.
inline PerfectnessResult is_perfect(const Graph& g, int size_limit = 24) {
  PerfectnessResult out;
  if (g.n() > size_limit) return out;
  out.odd_hole = detail::find_odd_hole(g);
  if (out.odd_hole.empty()) out.odd_antihole = detail::find_odd_hole(complement(g));
  out.perfect = out.odd_hole.empty() && out.odd_antihole.empty();
  return out;
}

struct ConformableResult {
  SearchOutcome outcome = SearchOutcome::Inconclusive;
  std::optional<VertexPartition> certificate;
  std::uint64_t nodes = 0;
};

/// Partition of V into exactly q independent classes, every class size having
/// the parity of n (empty classes count as size 0).
inline ConformableResult conformable_exists(const Graph& g, int q, const SearchBudget& budget = {}) {
  if (!g.regular_degree()) throw PreconditionError("conformable_exists requires a regular graph");
  if (q < 1) throw PreconditionError("conformable_exists: q must be positive");
  ConformableResult out;
  const int n = g.n();
  const int parity = n % 2;
  if (parity == 1 && q > n) {
    out.outcome = SearchOutcome::Infeasible;
    return out;
  }
  std::vector<std::vector<int>> classes;
  const detail::Deadline deadline(budget.time_limit_secs);
  bool aborted = false;

  auto search = [&](auto&& self, int v) -> bool {
    if (++out.nodes > budget.node_limit || ((out.nodes & 0xFFF) == 0 && deadline.passed())) {
      aborted = true;
      return false;
    }
    const int remaining = n - v;
    int wrong = 0;
    for (const auto& cls : classes) wrong += static_cast<int>(cls.size() % 2) != parity;
    const int unopened = q - static_cast<int>(classes.size());
    // each wrong-parity class needs a vertex; with odd n each unopened class does too
    if (wrong + (parity == 1 ? unopened : 0) > remaining) return false;
    if (v == n) return wrong == 0 && (parity == 0 || unopened == 0);
    for (std::size_t i = 0; i <= classes.size() && i < static_cast<std::size_t>(q); ++i) {
      if (i < classes.size()) {
        const auto& cls = classes[i];
        if (std::any_of(cls.begin(), cls.end(), [&](int u) { return g.adjacent(u, v); })) continue;
        classes[i].push_back(v);
        if (self(self, v + 1)) return true;
        classes[i].pop_back();
      } else {
        classes.push_back({v});
        if (self(self, v + 1)) return true;
        classes.pop_back();
      }
      if (aborted) return false;
    }
    return false;
  };

  if (search(search, 0)) {
    out.outcome = SearchOutcome::Feasible;
    VertexPartition p{classes};
    p.classes.resize(q);
    out.certificate = std::move(p);
  } else {
    out.outcome = aborted ? SearchOutcome::Inconclusive : SearchOutcome::Infeasible;
  }
  return out;
}

}  // namespace totalcolor
