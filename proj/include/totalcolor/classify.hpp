#pragma once

#include <optional>
#include <string>
#include <vector>

#include "totalcolor/coloring.hpp"
#include "totalcolor/methods.hpp"
#include "totalcolor/oracles.hpp"

namespace totalcolor {

enum class TotalType { TypeI, TypeII, Inconclusive };

inline const char* to_string(TotalType t) {
  switch (t) {
    case TotalType::TypeI: return "TypeI";
    case TotalType::TypeII: return "TypeII";
    case TotalType::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct Classification {
  TotalType type = TotalType::Inconclusive;
  int max_degree = 0;
  std::optional<TotalColoring> certificate;  // Delta+1 (type I) or Delta+2 (type II) coloring
  std::vector<std::string> evidence;
};

/// Type I needs a verified (Delta+1)-coloring; type II needs an exhausted
/// search at Delta+1 plus a verified (Delta+2)-coloring.
inline Classification classify_type(const Graph& g, const SearchBudget& budget = {}) {
  Classification out;
  out.max_degree = g.max_degree();
  const int target = out.max_degree + 1;
  std::optional<TotalColoring> upper;  // best verified coloring with Delta+2 colors

  try {
    MethodOptions options;
    options.budget = budget;
    auto built = construct(g, Method::Auto, options);
    out.evidence.push_back("construction " + built.method + " gave " + std::to_string(built.colors()) +
                           " colors (verified)");
    if (built.colors() <= target) {
      out.type = TotalType::TypeI;
      out.certificate = std::move(built.coloring);
      return out;
    }
    if (built.colors() == target + 1) upper = std::move(built.coloring);
  } catch (const Error& e) {
    out.evidence.push_back(std::string("no construction: ") + e.what());
  }

  const auto at_target = total_colorable(g, target, budget);
  out.evidence.push_back("exact search with " + std::to_string(target) + " colors: " + to_string(at_target.outcome) +
                         " after " + std::to_string(at_target.nodes) + " nodes");
  if (at_target.outcome == SearchOutcome::Feasible) {
    if (!verify_total(g, *at_target.certificate).ok()) throw ConstructionError("oracle certificate failed verification");
    out.type = TotalType::TypeI;
    out.certificate = at_target.certificate;
    return out;
  }
  if (at_target.outcome == SearchOutcome::Inconclusive) return out;

  if (!upper) {
    const auto at_next = total_colorable(g, target + 1, budget);
    out.evidence.push_back("exact search with " + std::to_string(target + 1) +
                           " colors: " + to_string(at_next.outcome) + " after " + std::to_string(at_next.nodes) +
                           " nodes");
    if (at_next.outcome == SearchOutcome::Feasible) upper = at_next.certificate;
    if (at_next.outcome == SearchOutcome::Infeasible) {
      out.evidence.push_back("no coloring with max degree + 2 colors exists");
      return out;
    }
  }
  if (upper && verify_total(g, *upper).ok()) {
    out.type = TotalType::TypeII;
    out.certificate = std::move(upper);
  }
  return out;
}

}  // namespace totalcolor
