#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "totalcolor/constructions.hpp"
#include "totalcolor/graph.hpp"
#include "totalcolor/oracles.hpp"

namespace totalcolor {

enum class Method { Auto, CompleteBipartite, UnitaryEven, OddCirculant, EvenDenseCirculant, PerfectCayley };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::CompleteBipartite: return "complete-bipartite";
    case Method::UnitaryEven: return "unitary-even";
    case Method::OddCirculant: return "odd-circulant";
    case Method::EvenDenseCirculant: return "even-dense";
    case Method::PerfectCayley: return "perfect-cayley";
  }
  return "?";
}

struct MethodOptions {
  Strategy strategy = Strategy::Auto;
  SearchBudget budget;
  int perfect_probe_limit = 24;  // largest n for which auto probes perfectness
};

/// Why a method does (empty) or does not apply to `g`.
inline std::optional<std::string> method_obstacle(const Graph& g, Method m, const MethodOptions& options = {}) {
  const auto* spec = g.circulant();
  switch (m) {
    case Method::Auto: return std::nullopt;
    case Method::CompleteBipartite: {
      const auto parts = bipartition(g);
      if (!parts || parts->first.empty() || parts->first.size() != parts->second.size()) return "not balanced bipartite";
      const int half = static_cast<int>(parts->first.size());
      if (g.edge_count() != half * half) return "bipartite but not complete";
      return std::nullopt;
    }
    case Method::UnitaryEven: {
      if (!spec) return "not a circulant";
      if (spec->n() < 2 || !(*spec == unitary_spec(spec->n()))) return "not a unitary Cayley graph";
      if (spec->n() % 2 != 0) return "n is odd";
      if (two_adic(spec->n()).odd_part == 1) return "n is a power of two";
      return std::nullopt;
    }
    case Method::OddCirculant: {
      if (!spec) return "not a circulant";
      const int q = spec->degree() + 1;
      if (spec->n() % 2 == 0) return "n is even";
      if (spec->n() % q != 0) return "degree + 1 does not divide n";
      std::vector<int> residues;
      for (int s : spec->connection())
        if (s % q == 0) return "a generator is divisible by degree + 1";
      for (int s : spec->half_set()) residues.push_back(s % q);
      std::sort(residues.begin(), residues.end());
      if (std::adjacent_find(residues.begin(), residues.end()) != residues.end()) {
        return "two generators congruent modulo degree + 1";
      }
      return std::nullopt;
    }
    case Method::EvenDenseCirculant: {
      if (!spec) return "not a circulant";
      const int n = spec->n();
      if (n % 4 != 2 || n < 6) return "n is not 2(2k+1)";
      if (2 * spec->degree() < n || spec->degree() >= n - 1) return "degree outside [n/2, n-1)";
      if (spec->contains(n / 2)) return "n/2 is a generator";
      return std::nullopt;
    }
    case Method::PerfectCayley: {
      if (!g.regular_degree()) return "not regular";
      if (g.n() == 0 || g.n() > options.perfect_probe_limit) return "outside the perfectness probe size";
      if (!is_perfect(g).perfect.value_or(false)) return "not perfect";
      const auto chi = exact_chromatic(g, options.budget);
      if (!chi.exact) return "chromatic number undecided";
      if (*chi.value % 2 == 0) return "chromatic number even";
      if (g.n() % *chi.value != 0) return "chromatic number does not divide n";
      return std::nullopt;
    }
  }
  return "unknown method";
}

struct MethodSelection {
  std::optional<Method> method;
  std::vector<std::string> log;  // one line per candidate examined
};

inline MethodSelection select_method(const Graph& g, const MethodOptions& options = {}) {
  MethodSelection sel;
  for (Method m : {Method::CompleteBipartite, Method::UnitaryEven, Method::OddCirculant, Method::EvenDenseCirculant,
                   Method::PerfectCayley}) {
    const auto why = method_obstacle(g, m, options);
    sel.log.push_back(std::string(to_string(m)) + ": " + (why ? "skipped (" + *why + ")" : "matched"));
    if (!why) {
      sel.method = m;
      break;
    }
  }
  return sel;
}

/// Runs one construction. Auto picks the first method whose preconditions hold.
inline ConstructionResult construct(const Graph& g, Method method, const MethodOptions& options = {}) {
  std::vector<std::string> log;
  if (method == Method::Auto) {
    auto sel = select_method(g, options);
    log = std::move(sel.log);
    if (!sel.method) {
      std::string lines;
      for (const auto& l : log) lines += "\n  " + l;
      throw PreconditionError("auto: no construction applies" + lines);
    }
    method = *sel.method;
  } else if (auto why = method_obstacle(g, method, options)) {
    throw PreconditionError(std::string(to_string(method)) + ": " + *why);
  }
  ConstructionResult r;
  switch (method) {
    case Method::CompleteBipartite: r = color_complete_bipartite(g); break;
    case Method::UnitaryEven: r = color_unitary_even(g.n()); break;
    case Method::OddCirculant: r = color_odd_circulant(*g.circulant(), options.strategy); break;
    case Method::EvenDenseCirculant: r = color_even_dense_circulant(*g.circulant()); break;
    case Method::PerfectCayley: r = color_perfect_cayley(g, options.budget); break;
    case Method::Auto: break;
  }
  r.graph = g;
  r.notes.insert(r.notes.begin(), log.begin(), log.end());
  return r;
}

}  // namespace totalcolor
