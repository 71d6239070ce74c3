#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "totalcolor/error.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

// DIMACS edge format: `p edge <n> <m>`, `e <u> <v>` (1-indexed), `c` comments.
// A circulant graph additionally carries `c circulant <n> <s1> <s2> ...`.

inline void write_dimacs(std::ostream& out, const Graph& g) {
  if (const auto* spec = g.circulant()) {
    out << "c circulant " << spec->n();
    for (int s : spec->connection()) out << ' ' << s;
    out << '\n';
  }
  out << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline Graph read_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  long declared_edges = -1;
  std::vector<Edge> edges;
  std::optional<CirculantSpec> circulant;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw FormatError("dimacs line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "c") {
      std::string kind;
      if (fields >> kind && kind == "circulant") {
        int cn = 0;
        if (!(fields >> cn)) fail("circulant comment without vertex count");
        std::vector<int> conn;
        int s = 0;
        while (fields >> s) conn.push_back(s);
        try {
          circulant = CirculantSpec(cn, conn);
        } catch (const PreconditionError& e) {
          fail(e.what());
        }
      }
    } else if (tag == "p") {
      std::string format;
      if (!(fields >> format >> n >> declared_edges) || (format != "edge" && format != "col")) {
        fail("expected `p edge <n> <m>`");
      }
      if (n < 0 || declared_edges < 0) fail("negative size");
    } else if (tag == "e") {
      if (n < 0) fail("edge before problem line");
      int u = 0, v = 0;
      if (!(fields >> u >> v)) fail("expected `e <u> <v>`");
      if (u < 1 || v < 1 || u > n || v > n) fail("vertex out of range");
      if (u == v) fail("self-loop");
      edges.push_back(make_edge(u - 1, v - 1));
    } else {
      fail("unknown record `" + tag + "`");
    }
  }
  if (n < 0) throw FormatError("dimacs: missing problem line");
  Graph g(n, edges);
  if (g.edge_count() != declared_edges) {
    throw FormatError("dimacs: header declares " + std::to_string(declared_edges) + " edges, found " +
                      std::to_string(g.edge_count()));
  }
  if (circulant) {
    if (circulant->n() != n) throw FormatError("dimacs: circulant comment disagrees with vertex count");
    Graph rebuilt = build_circulant(*circulant);
    if (!rebuilt.same_adjacency(g)) throw FormatError("dimacs: circulant comment disagrees with edge list");
    return rebuilt;
  }
  return g;
}

}  // namespace totalcolor
