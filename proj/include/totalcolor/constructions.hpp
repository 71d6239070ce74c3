#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "totalcolor/arith.hpp"
#include "totalcolor/cliques.hpp"
#include "totalcolor/coloring.hpp"
#include "totalcolor/edge_coloring.hpp"
#include "totalcolor/error.hpp"
#include "totalcolor/graph.hpp"
#include "totalcolor/matching.hpp"
#include "totalcolor/oracles.hpp"
#include "totalcolor/starter.hpp"

namespace totalcolor {

/// Partial coloring produced by one step of a construction.
struct Stage {
  std::string name;
  TotalColoring fragment;
};

struct ConstructionResult {
  std::string method;
  std::string strategy;  // which rule set produced the diagonal starts, when relevant
  Graph graph;
  TotalColoring coloring;
  VerificationReport report;
  std::vector<Stage> stages;
  std::vector<std::string> notes;

  int colors() const { return report.colors_used; }
};

enum class Strategy { Literal, Starter, Auto };

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Literal: return "literal";
    case Strategy::Starter: return "starter";
    case Strategy::Auto: return "auto";
  }
  return "?";
}

namespace detail {

template <typename Range>
std::string join(const Range& values, const char* sep = " ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << sep;
    out << v;
    first = false;
  }
  return out.str();
}

inline std::string summarize_failures(const VerificationReport& report, std::size_t limit = 5) {
  std::ostringstream out;
  out << report.conflicts.size() << " conflicts, " << report.coverage.size() << " coverage issues";
  std::size_t shown = 0;
  for (const auto& c : report.coverage) {
    if (shown++ == limit) break;
    out << "; " << describe(c);
  }
  for (const auto& c : report.conflicts) {
    if (shown++ == limit) break;
    out << "; " << describe(c);
  }
  return out.str();
}

/// Verifies and throws with diagnostics on failure.
inline ConstructionResult finish(ConstructionResult r) {
  r.report = verify_total(r.graph, r.coloring);
  if (!r.report.ok()) {
    throw ConstructionError(r.method + ": output failed verification (" + summarize_failures(r.report) + ")");
  }
  return r;
}

inline std::vector<DiagonalStart> starts_from_pairing(std::span<const int> generators, const StarterPairing& p) {
  std::vector<DiagonalStart> out;
  for (std::size_t i = 0; i < generators.size(); ++i) out.push_back({generators[i], p.pairs[i].high + 1});
  return out;
}

// Each generator s of an even circulant with s odd splits Z_n's cycles into
// alternating even/odd starting points; color `base + 2p - 1` on edges
// {i, i+s} with i even and `base + 2p` with i odd, p = 1, 2, ...
inline TotalColoring alternate_by_parity(int n, std::span<const int> generators, int base) {
  TotalColoring c(n);
  int p = 1;
  for (int s : generators) {
    for (int i = 0; i < n; ++i) c.set_edge(i, (i + s) % n, i % 2 == 0 ? base + 2 * p - 1 : base + 2 * p);
    ++p;
  }
  return c;
}

}  // namespace detail

/// K_{m,m} (balanced complete bipartite) with m + 2 colors: left vertices m+1,
/// right vertices m+2, edge (left i, right j) ((i + j) mod m) + 1.
inline ConstructionResult color_complete_bipartite(const Graph& g) {
  const auto parts = bipartition(g);
  if (!parts || parts->first.size() != parts->second.size() || parts->first.empty()) {
    throw PreconditionError("complete-bipartite: graph is not a balanced bipartite graph");
  }
  const int m = static_cast<int>(parts->first.size());
  if (g.edge_count() != m * m) throw PreconditionError("complete-bipartite: graph is not complete bipartite");
  ConstructionResult r;
  r.method = "complete-bipartite";
  r.graph = g;
  r.coloring = TotalColoring(g.n());
  for (int i = 0; i < m; ++i) {
    r.coloring.set_vertex(parts->first[i], m + 1);
    r.coloring.set_vertex(parts->second[i], m + 2);
    for (int j = 0; j < m; ++j) r.coloring.set_edge(parts->first[i], parts->second[j], (i + j) % m + 1);
  }
  r.notes.push_back("K_{" + std::to_string(m) + "," + std::to_string(m) + "}: " + std::to_string(m + 2) +
                    " colors (max degree + 2)");
  return detail::finish(std::move(r));
}

inline ConstructionResult color_complete_bipartite(int m) {
  if (m < 1) throw PreconditionError("complete-bipartite: m must be positive");
  return color_complete_bipartite(complete_bipartite(m));
}

/// Unitary Cayley graph U_n, n = 2^k m with m > 1 odd, in phi(n) + 1 colors.
///
/// With r the least prime factor of m, part one colors vertex v with
/// (v mod r) + 1 and the factors of generators 1, 3, ..., r-2 by diagonal
/// patterns whose starts come from the even-column rule, using colors 1..r.
/// Part two gives each remaining generator pair two fresh colors, alternating
/// on even/odd starting vertices; all units are odd, so every edge joins the
/// two parities and the alternation is proper.
inline ConstructionResult color_unitary_even(int n) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("unitary-even: n must be even");
  const auto [k, m] = two_adic(n);
  if (m == 1) throw PreconditionError("unitary-even: n is a power of two; use complete-bipartite");
  const int r = least_prime_factor(m);

  ConstructionResult out;
  out.method = "unitary-even";
  out.strategy = "literal";
  out.graph = build_unitary(n);
  const auto& spec = *out.graph.circulant();
  out.notes.push_back("n = 2^" + std::to_string(k) + " * " + std::to_string(m) + ", least prime factor r = " +
                      std::to_string(r) + ", phi(n) = " + std::to_string(spec.degree()));

  std::vector<int> columns{1};
  for (int j = 2; j < r; j += 2) columns.push_back(j);
  const auto table = start_entries(r, columns, n);
  std::vector<DiagonalStart> part1;
  for (const auto& e : table.entries) {
    if (e.column == 1) continue;
    part1.push_back({e.column - 1, e.start});
    out.notes.push_back("part 1: generator " + std::to_string(e.column - 1) + " column " + std::to_string(e.column) +
                        " start " + std::to_string(e.start) + " wrap " + std::to_string(e.wrap));
  }
  TotalColoring first = fill_diagonals(n, r, part1);

  std::vector<int> rest;
  for (int s : spec.half_set())
    if (s >= r) rest.push_back(s);
  TotalColoring second = detail::alternate_by_parity(n, rest, r);
  for (std::size_t p = 0; p < rest.size(); ++p) {
    out.notes.push_back("part 2: generator " + std::to_string(rest[p]) + " colors " + std::to_string(r + 2 * p + 1) +
                        "/" + std::to_string(r + 2 * p + 2));
  }

  out.coloring = first;
  out.coloring.merge(second);
  out.stages.push_back({"part 1", std::move(first)});
  out.stages.push_back({"part 2", std::move(second)});
  return detail::finish(std::move(out));
}

/// Odd-order circulant with q = Delta + 1 dividing n, no generator divisible
/// by q, and half-set generators pairwise incongruent mod q, in Delta + 1
/// colors. Vertex v gets (v mod q) + 1; generator s sits in column s + 1.
/// Literal: starts from the column rules. Starter: starts from a pairing of
/// the nonzero residues with differences s mod q. Auto tries literal first.
inline ConstructionResult color_odd_circulant(const CirculantSpec& spec, Strategy strategy = Strategy::Auto) {
  const int n = spec.n();
  const int q = spec.degree() + 1;
  if (n % 2 == 0) throw PreconditionError("odd-circulant: n must be odd");
  if (n % q != 0) throw PreconditionError("odd-circulant: degree + 1 = " + std::to_string(q) + " does not divide n");
  for (int s : spec.connection())
    if (s % q == 0) throw PreconditionError("odd-circulant: generator " + std::to_string(s) + " divisible by " + std::to_string(q));
  const auto half = spec.half_set();
  {
    std::vector<int> residues;
    for (int s : half) residues.push_back(s % q);
    std::sort(residues.begin(), residues.end());
    if (std::adjacent_find(residues.begin(), residues.end()) != residues.end()) {
      throw PreconditionError("odd-circulant: two generators congruent modulo " + std::to_string(q));
    }
  }

  ConstructionResult out;
  out.method = "odd-circulant";
  out.graph = build_circulant(spec);
  out.notes.push_back("modulus q = " + std::to_string(q) + ", half-set generators " + detail::join(half));
  if (q == 1) {
    // K_1
    out.strategy = "literal";
    out.coloring = fill_diagonals(n, 1, {});
    return detail::finish(std::move(out));
  }

  if (strategy != Strategy::Starter) {
    std::vector<int> columns;
    for (int s : half) columns.push_back(s + 1);
    const auto table = start_entries(q, columns, n);
    std::vector<DiagonalStart> starts;
    for (const auto& e : table.entries) {
      starts.push_back({e.column - 1, e.start});
      out.notes.push_back("literal: column " + std::to_string(e.column) + " start " + std::to_string(e.start) +
                          " wrap " + std::to_string(e.wrap));
    }
    TotalColoring c = fill_diagonals(n, q, starts);
    const auto report = verify_total(out.graph, c);
    if (report.ok()) {
      out.strategy = "literal";
      out.notes.push_back("literal rules produced a proper coloring");
      out.coloring = c;
      out.stages.push_back({"diagonals", std::move(c)});
      return detail::finish(std::move(out));
    }
    out.notes.push_back("literal rules failed: " + detail::summarize_failures(report, 3));
    if (strategy == Strategy::Literal) {
      throw ConstructionError("odd-circulant: literal rules failed (" + detail::summarize_failures(report) + ")");
    }
  }

  std::vector<int> diffs;
  for (int s : half) diffs.push_back(s % q);
  const auto found = starter_search(q, diffs);
  if (!found.pairing) {
    throw ConstructionError(std::string("odd-circulant: ") +
                            (found.complete ? "no starter pairing exists" : "starter search budget exhausted"));
  }
  for (const auto& p : found.pairing->pairs) {
    out.notes.push_back("starter: difference " + std::to_string(p.difference) + " pair {" + std::to_string(p.high) +
                        "," + std::to_string(p.low) + "}");
  }
  TotalColoring c = fill_diagonals(n, q, detail::starts_from_pairing(half, *found.pairing));
  out.strategy = "starter";
  if (strategy == Strategy::Auto) out.notes.push_back("starter fallback used");
  out.coloring = c;
  out.stages.push_back({"diagonals", std::move(c)});
  return detail::finish(std::move(out));
}

/// n = 2(2k+1), n/2 <= Delta < n - 1, n/2 not a generator; Delta + 1
/// colors. Connectivity of the complement is reported, not required. Vertex v gets (v mod (2k+1)) + 1, so each
/// color class is a pair {v, v + n/2} (a perfect matching of the
/// complement). A k-subset H of half-set generators is colored by a starter
/// pairing mod 2k+1; the remaining Delta - 2k regular part takes Delta - 2k
/// fresh colors. H is the lexicographically first subset whose starter exists
/// and whose remainder is connected and colorable within budget; if no
/// subset keeps the remainder connected, connectivity is dropped.
inline ConstructionResult color_even_dense_circulant(const CirculantSpec& spec) {
  const int n = spec.n();
  const int delta = spec.degree();
  if (n % 4 != 2 || n < 6) throw PreconditionError("even-dense: n must be 2(2k+1) with k >= 1");
  if (2 * delta < n || delta >= n - 1) {
    throw PreconditionError("even-dense: degree must satisfy n/2 <= degree < n-1");
  }
  if (spec.contains(n / 2)) throw PreconditionError("even-dense: n/2 in the connection set is not supported");
  const Graph g = build_circulant(spec);
  const Graph co = complement(g);

  const int q = n / 2;
  const int k = (q - 1) / 2;
  const int budget = delta - 2 * k;

  ConstructionResult out;
  out.method = "even-dense";
  out.strategy = "starter";
  out.graph = g;
  {
    Matching residue_pairs;
    for (int v = 0; v < q; ++v) residue_pairs.edges.push_back({v, v + q});
    const auto any = perfect_matching(co);
    out.notes.push_back("complement perfect matching exists: " + std::string(any ? "yes" : "no") +
                        "; residue pairs {v, v+" + std::to_string(q) + "} form one: " +
                        (residue_pairs.perfect_for(co) ? "yes" : "no"));
  }
  out.notes.push_back(std::string("complement connected: ") + (connected(co) ? "yes" : "no"));
  out.notes.push_back("q = " + std::to_string(q) + ", k = " + std::to_string(k) + ", remainder budget " +
                      std::to_string(budget) + " colors");

  const auto half = spec.half_set();
  const int h = static_cast<int>(half.size());
  std::optional<ConstructionResult> accepted;

  for (int pass = 0; pass < 2 && !accepted; ++pass) {
    const bool need_connected = pass == 0;
    if (pass == 1) out.notes.push_back("no subset leaves a connected remainder; relaxing connectivity");
    // k-subsets of half in lexicographic order
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (!accepted) {
      std::vector<int> chosen, rest;
      for (int i = 0, t = 0; i < h; ++i) {
        if (t < k && idx[t] == i) {
          chosen.push_back(half[i]);
          ++t;
        } else {
          rest.push_back(half[i]);
        }
      }
      const std::string label = "H {" + detail::join(chosen, ",") + "}";
      std::vector<Edge> h_edges;
      for (int s : chosen)
        for (int i = 0; i < n; ++i) h_edges.push_back(make_edge(i, (i + s) % n));
      const Graph remainder = remove_edges(g, h_edges);
      const bool rest_connected = connected(remainder);

      std::string verdict;
      if (need_connected && !rest_connected) {
        verdict = "remainder disconnected";
      } else {
        const auto found = starter_search(q, chosen);
        if (!found.pairing) {
          verdict = "no starter pairing";
        } else {
          std::optional<TotalColoring> rest_coloring;
          const bool all_odd = std::all_of(rest.begin(), rest.end(), [](int s) { return s % 2 == 1; });
          if (all_odd) {
            rest_coloring = detail::alternate_by_parity(n, rest, q);
          } else {
            const auto ec = edge_color_vizing(remainder);
            if (ec.colors_used <= budget) {
              TotalColoring c(n);
              for (const auto& [e, color] : ec.color) c.set_edge(e.u, e.v, q + color);
              rest_coloring = std::move(c);
            } else {
              verdict = "remainder edge coloring needs " + std::to_string(ec.colors_used) + " > " +
                        std::to_string(budget) + " colors";
            }
          }
          if (rest_coloring) {
            TotalColoring first = fill_diagonals(n, q, detail::starts_from_pairing(chosen, *found.pairing));
            ConstructionResult r = out;
            r.coloring = first;
            r.coloring.merge(*rest_coloring);
            if (verify_total(g, r.coloring).ok()) {
              verdict = std::string("accepted (remainder ") + (rest_connected ? "connected" : "disconnected") +
                        (all_odd ? ", alternating even cycles" : ", fan recoloring") + ")";
              for (const auto& p : found.pairing->pairs) {
                r.notes.push_back("starter: difference " + std::to_string(p.difference) + " pair {" +
                                  std::to_string(p.high) + "," + std::to_string(p.low) + "}");
              }
              r.notes.push_back(label + ": " + verdict);
              r.stages.push_back({"subgraph H", std::move(first)});
              r.stages.push_back({"remainder", std::move(*rest_coloring)});
              accepted = std::move(r);
              break;
            }
            verdict = "verification failed";
          }
        }
      }
      out.notes.push_back(label + ": rejected (" + verdict + ")");

      int t = k - 1;
      while (t >= 0 && idx[t] == h - k + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
  }
  if (!accepted) {
    std::string why;
    for (const auto& line : out.notes) why += "\n  " + line;
    throw ConstructionError("even-dense: no admissible subgraph H" + why);
  }
  return detail::finish(std::move(*accepted));
}

/// K_q, q odd, in q colors: vertex i gets (2i mod q) + 1, edge {i, j} gets
/// ((i + j) mod q) + 1.
inline ConstructionResult color_complete_odd(int q) {
  if (q < 1 || q % 2 == 0) throw PreconditionError("complete-odd: q must be odd");
  ConstructionResult r;
  r.method = "complete-odd";
  r.graph = complete_graph(q);
  r.coloring = TotalColoring(q);
  for (int i = 0; i < q; ++i) {
    r.coloring.set_vertex(i, 2 * i % q + 1);
    for (int j = i + 1; j < q; ++j) r.coloring.set_edge(i, j, (i + j) % q + 1);
  }
  return detail::finish(std::move(r));
}

/// Perfect (Cayley) graph with odd chromatic number chi dividing n, in at
/// most Delta + 2 colors. Vertices take an optimal chi-coloring; a cover by
/// n/chi disjoint maximum cliques is colored clique by clique with the K_chi
/// pattern placed so its vertex colors agree (position p = c (chi+1)/2 mod
/// chi has 2p = c); the remaining (Delta - chi + 1)-regular part is edge
/// colored with fresh colors. Delta + 1 total exactly when that part is
/// class I.
inline ConstructionResult color_perfect_cayley(const Graph& g, const SearchBudget& budget = {}) {
  if (g.n() == 0) throw PreconditionError("perfect-cayley: empty graph");
  if (!g.regular_degree()) throw PreconditionError("perfect-cayley: graph is not regular");
  const auto perfect = is_perfect(g);
  if (!perfect.perfect) throw PreconditionError("perfect-cayley: perfectness undecided beyond the size limit");
  if (!*perfect.perfect) throw PreconditionError("perfect-cayley: graph is not perfect");

  if (g.is_complete()) {
    if (g.n() % 2 == 0) throw PreconditionError("perfect-cayley: chromatic number is even");
    ConstructionResult r = color_complete_odd(g.n());
    r.method = "perfect-cayley";
    r.graph = g;
    r.notes.push_back("complete graph: K_" + std::to_string(g.n()) + " pattern");
    return detail::finish(std::move(r));
  }

  const auto chromatic = exact_chromatic(g, budget);
  if (!chromatic.exact) throw PreconditionError("perfect-cayley: chromatic number search inconclusive");
  const int chi = *chromatic.value;
  if (chi % 2 == 0) throw PreconditionError("perfect-cayley: chromatic number " + std::to_string(chi) + " is even");
  if (g.n() % chi != 0) {
    throw PreconditionError("perfect-cayley: chromatic number " + std::to_string(chi) + " does not divide n");
  }
  const auto cover = clique_cover_disjoint(g);
  if (!cover) throw ConstructionError("perfect-cayley: no disjoint clique cover");

  ConstructionResult out;
  out.method = "perfect-cayley";
  out.graph = g;
  if (!g.circulant() && !g.cayley()) out.notes.push_back("graph carries no Cayley provenance");
  out.notes.push_back("chromatic number " + std::to_string(chi) + ", " + std::to_string(cover->cliques.size()) +
                      " disjoint maximum cliques");

  TotalColoring cliques(g.n());
  for (int v = 0; v < g.n(); ++v) cliques.set_vertex(v, chromatic.coloring[v]);
  std::vector<Edge> clique_edges;
  for (const auto& q : cover->cliques) {
    out.notes.push_back("clique {" + detail::join(q, ",") + "}");
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t b = a + 1; b < q.size(); ++b) {
        const int pa = (chromatic.coloring[q[a]] - 1) * (chi + 1) / 2 % chi;
        const int pb = (chromatic.coloring[q[b]] - 1) * (chi + 1) / 2 % chi;
        cliques.set_edge(q[a], q[b], (pa + pb) % chi + 1);
        clique_edges.push_back(make_edge(q[a], q[b]));
      }
    }
  }
  const Graph remainder = remove_edges(g, clique_edges);
  const auto ec = edge_color_vizing(remainder);
  TotalColoring rest(g.n());
  for (const auto& [e, color] : ec.color) rest.set_edge(e.u, e.v, chi + color);
  const int rest_degree = remainder.max_degree();
  out.notes.push_back("remainder degree " + std::to_string(rest_degree) + ", edge colors " +
                      std::to_string(ec.colors_used) + (ec.colors_used <= rest_degree ? " (class I)" : " (class II)"));

  out.coloring = cliques;
  out.coloring.merge(rest);
  out.stages.push_back({"cliques", std::move(cliques)});
  out.stages.push_back({"remainder", std::move(rest)});
  auto done = detail::finish(std::move(out));
  const int delta = g.max_degree();
  done.notes.push_back("total " + std::to_string(done.colors()) + " colors (" +
                       (done.colors() == delta + 1 ? "max degree + 1" : "max degree + 2") + ")");
  return done;
}

}  // namespace totalcolor
