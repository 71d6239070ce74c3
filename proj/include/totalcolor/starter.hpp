#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "totalcolor/arith.hpp"
#include "totalcolor/coloring.hpp"
#include "totalcolor/error.hpp"

namespace totalcolor {

// Diagonal-pattern colorings of circulants. Row i of the total color matrix
// is row 0 shifted by i, with every value advanced by i modulo q. A
// generator s occupies column j = s + 1 of row 0 (1-indexed) with value
// start(j); the same cycle re-enters row 0 at column n + 2 - j with value
// wrap(j), and consistency around Z_n forces start(j) - wrap(j) = j - 1 (mod q).

struct StartEntry {
  int column = 0;
  int start = 0;
  int wrap = 0;

  bool operator==(const StartEntry&) const = default;
};

struct StartEntryTable {
  int modulus = 0;
  int n = 0;
  std::vector<StartEntry> entries;  // in requested column order

  const StartEntry* find(int column) const {
    for (const auto& e : entries)
      if (e.column == column) return &e;
    return nullptr;
  }
};

/// Column j = 1 holds 1; odd j > 1 holds 2 + (j-3)/2 with wrap q - (j-3)/2;
/// even j holds (q+1)/2 + (j-2)/2 + 1 with wrap (q+1)/2 - (j-2)/2. Values
/// are reduced into 1..q with 0 read as q.
inline StartEntryTable start_entries(int q, std::span<const int> columns, int n) {
  if (q < 3 || q % 2 == 0) throw PreconditionError("start_entries: modulus must be odd and at least 3");
  if (n % q != 0) throw PreconditionError("start_entries: modulus must divide n");
  StartEntryTable table{q, n, {}};
  for (int j : columns) {
    if (j < 1 || j > n / 2 + 1) {
      throw PreconditionError("start_entries: column " + std::to_string(j) + " outside 1.." + std::to_string(n / 2 + 1));
    }
    StartEntry e{j, 1, 1};
    if (j == 1) {
      // the principal diagonal itself
    } else if (j % 2 == 1) {
      e.start = wrap_to_range(2 + (j - 3) / 2, q);
      e.wrap = wrap_to_range(q - (j - 3) / 2, q);
    } else {
      e.start = wrap_to_range((q + 1) / 2 + (j - 2) / 2 + 1, q);
      e.wrap = wrap_to_range((q + 1) / 2 - (j - 2) / 2, q);
    }
    table.entries.push_back(e);
  }
  return table;
}

struct StarterPair {
  int difference = 0;  // requested residue d, 1..q-1
  int high = 0;        // high - low = d (mod q)
  int low = 0;

  bool operator==(const StarterPair&) const = default;
};

/// Disjoint pairs of nonzero residues mod q, one per requested difference,
/// listed in request order.
struct StarterPairing {
  int modulus = 0;
  std::vector<StarterPair> pairs;
};

struct StarterSearchResult {
  std::optional<StarterPairing> pairing;
  bool complete = true;  // false when the node budget ran out before a verdict
  std::uint64_t nodes = 0;
};

inline bool valid_pairing(const StarterPairing& p, std::span<const int> differences) {
  if (p.pairs.size() != differences.size()) return false;
  std::vector<char> used(p.modulus, 0);
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    const auto& pair = p.pairs[i];
    if (pair.difference != mod(differences[i], p.modulus)) return false;
    for (int x : {pair.high, pair.low}) {
      if (x <= 0 || x >= p.modulus || used[x]) return false;
      used[x] = 1;
    }
    if (mod(pair.high - pair.low, p.modulus) != pair.difference) return false;
  }
  return true;
}

namespace detail {

class StarterSearch {
 public:
  StarterSearch(int q, std::map<int, int> remaining, std::uint64_t node_limit)
      : q_(q), remaining_(std::move(remaining)), used_(q, 0), node_limit_(node_limit) {
    used_[0] = 1;
    for (const auto& [d, count] : remaining_) left_ += count;
  }

  bool run() { return left_ * 2 == q_ - 1 ? cover_smallest() : place_in_order(); }

  bool exhausted() const { return nodes_ > node_limit_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<StarterPair>& found() const { return chosen_; }

 private:
  bool take(int d, int high, int low) {
    if (high == 0 || low == 0 || high == low || used_[high] || used_[low]) return false;
    used_[high] = used_[low] = 1;
    --remaining_[d];
    --left_;
    chosen_.push_back({d, high, low});
    return true;
  }

  void release(int d) {
    const auto p = chosen_.back();
    chosen_.pop_back();
    used_[p.high] = used_[p.low] = 0;
    ++remaining_[d];
    ++left_;
  }

  // Full partition: the least free residue must belong to some pair.
  bool cover_smallest() {
    if (left_ == 0) return true;
    if (++nodes_ > node_limit_) return false;
    int x = 1;
    while (used_[x]) ++x;
    for (auto& [d, count] : remaining_) {
      if (count == 0) continue;
      for (int orientation = 0; orientation < 2; ++orientation) {
        const int high = orientation == 0 ? x : mod(x + d, q_);
        const int low = orientation == 0 ? mod(x - d, q_) : x;
        if (!take(d, high, low)) continue;
        if (cover_smallest()) return true;
        release(d);
        if (exhausted()) return false;
      }
    }
    return false;
  }

  // Partial pairing: place differences one value class at a time.
  bool place_in_order() {
    if (left_ == 0) return true;
    if (++nodes_ > node_limit_) return false;
    auto it = std::find_if(remaining_.begin(), remaining_.end(), [](const auto& kv) { return kv.second > 0; });
    const int d = it->first;
    const int floor = !chosen_.empty() && chosen_.back().difference == d ? chosen_.back().low + 1 : 1;
    for (int low = floor; low < q_; ++low) {
      if (!take(d, mod(low + d, q_), low)) continue;
      if (place_in_order()) return true;
      release(d);
      if (exhausted()) return false;
    }
    return false;
  }

  int q_;
  std::map<int, int> remaining_;
  std::vector<char> used_;
  std::vector<StarterPair> chosen_;
  int left_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_limit_;
};

}  // namespace detail

/// Backtracking search for pairs {x, x - d} of distinct nonzero residues mod
/// q, one per requested difference d. Deterministic: the same request always
/// yields the same pairing.
inline StarterSearchResult starter_search(int q, std::span<const int> differences,
                                          std::uint64_t node_limit = 50'000'000) {
  if (q < 1 || q % 2 == 0) throw PreconditionError("starter_search: modulus must be odd");
  if (2 * differences.size() > static_cast<std::size_t>(q - 1)) {
    throw PreconditionError("starter_search: more differences than residue pairs");
  }
  std::map<int, int> counts;
  for (int d : differences) {
    const int r = mod(d, q);
    if (r == 0) return {std::nullopt, true, 0};
    ++counts[r];
  }
  detail::StarterSearch search(q, counts, node_limit);
  const bool ok = search.run();
  StarterSearchResult result;
  result.nodes = search.nodes();
  result.complete = ok || !search.exhausted();
  if (!ok) return result;

  // Hand pairs back in request order.
  std::vector<StarterPair> pool = search.found();
  StarterPairing pairing{q, {}};
  for (int d : differences) {
    auto it = std::find_if(pool.begin(), pool.end(), [&](const StarterPair& p) { return p.difference == mod(d, q); });
    pairing.pairs.push_back(*it);
    pool.erase(it);
  }
  result.pairing = std::move(pairing);
  return result;
}

struct DiagonalStart {
  int generator = 0;
  int start = 0;  // color in 1..q of edge {0, generator}
};

/// Vertex v gets (v mod q) + 1; edge {i, i + s} gets ((start - 1 + i) mod q) + 1.
inline TotalColoring fill_diagonals(int n, int q, std::span<const DiagonalStart> generators, bool color_vertices = true) {
  if (q < 1 || n % q != 0) throw PreconditionError("fill_diagonals: modulus must divide n");
  TotalColoring c(n);
  if (color_vertices)
    for (int v = 0; v < n; ++v) c.set_vertex(v, v % q + 1);
  for (const auto& g : generators) {
    if (g.generator <= 0 || g.generator >= n) throw PreconditionError("fill_diagonals: generator out of range");
    for (int i = 0; i < n; ++i) {
      const int j = (i + g.generator) % n;
      if (c.edge(i, j)) continue;  // s = n/2 meets each edge twice
      c.set_edge(i, j, mod(g.start - 1 + i, q) + 1);
    }
  }
  return c;
}

}  // namespace totalcolor
