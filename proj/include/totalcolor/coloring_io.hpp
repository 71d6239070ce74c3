#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "totalcolor/coloring.hpp"
#include "totalcolor/error.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

// Coloring text format, 0-indexed:
//   t <n> <color-count>
//   v <vertex> <color>
//   e <u> <v> <color>
// Blank lines and lines starting with `c` are ignored.

inline void write_coloring(std::ostream& out, const TotalColoring& c) {
  out << "t " << c.n() << ' ' << color_count(c) << '\n';
  for (int v = 0; v < c.n(); ++v)
    if (c.vertex(v) != 0) out << "v " << v << ' ' << c.vertex(v) << '\n';
  for (const auto& [e, color] : c.edge_colors()) out << "e " << e.u << ' ' << e.v << ' ' << color << '\n';
}

inline std::string to_coloring_text(const TotalColoring& c) {
  std::ostringstream out;
  write_coloring(out, c);
  return out.str();
}

inline TotalColoring read_coloring(std::istream& in) {
  std::string line;
  int line_no = 0;
  int declared_colors = -1;
  std::optional<TotalColoring> c;
  auto fail = [&](const std::string& why) {
    throw FormatError("coloring line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "t") {
      int n = 0;
      if (c) fail("duplicate header");
      if (!(fields >> n >> declared_colors) || n < 0 || declared_colors < 0) fail("expected `t <n> <color-count>`");
      c.emplace(n);
      continue;
    }
    if (!c) fail("record before `t` header");
    try {
      if (tag == "v") {
        int v = 0, color = 0;
        if (!(fields >> v >> color)) fail("expected `v <vertex> <color>`");
        if (v >= 0 && v < c->n() && c->vertex(v) != 0) fail("vertex colored twice");
        c->set_vertex(v, color);
      } else if (tag == "e") {
        int u = 0, v = 0, color = 0;
        if (!(fields >> u >> v >> color)) fail("expected `e <u> <v> <color>`");
        if (u >= 0 && v >= 0 && u < c->n() && v < c->n() && u != v && c->edge(u, v)) fail("edge colored twice");
        c->set_edge(u, v, color);
      } else {
        fail("unknown record `" + tag + "`");
      }
    } catch (const PreconditionError& e) {
      fail(e.what());
    }
  }
  if (!c) throw FormatError("coloring: missing `t` header");
  if (color_count(*c) != declared_colors) {
    throw FormatError("coloring: header declares " + std::to_string(declared_colors) + " colors, found " +
                      std::to_string(color_count(*c)));
  }
  return *std::move(c);
}

// CSV matrix: header row `,0,1,...,n-1`, then `i,cell,...`; empty cell = blank.

inline void write_matrix_csv(std::ostream& out, const TotalColorMatrix& m) {
  for (int j = 0; j < m.n; ++j) out << ',' << j;
  out << '\n';
  for (int i = 0; i < m.n; ++i) {
    out << i;
    for (int j = 0; j < m.n; ++j) {
      out << ',';
      if (m.at(i, j) != 0) out << m.at(i, j);
    }
    out << '\n';
  }
}

/// Adjacency matrix in the same layout: 0 on the diagonal, 1 on edges.
inline void write_adjacency_csv(std::ostream& out, const Graph& g) {
  for (int j = 0; j < g.n(); ++j) out << ',' << j;
  out << '\n';
  for (int i = 0; i < g.n(); ++i) {
    out << i;
    for (int j = 0; j < g.n(); ++j) {
      out << ',';
      if (i == j) out << 0;
      else if (g.adjacent(i, j)) out << 1;
    }
    out << '\n';
  }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (ch != '\r' && ch != ' ' && ch != '\t') {
      cell.push_back(ch);
    }
  }
  cells.push_back(cell);
  return cells;
}

inline int parse_cell(const std::string& text, int row, int col) {
  if (text.empty()) return 0;
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 0) {
    throw FormatError("csv cell (" + std::to_string(row) + "," + std::to_string(col) + ") is not a color: `" + text +
                      "`");
  }
  return value;
}

}  // namespace detail

inline TotalColorMatrix read_matrix_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(detail::split_csv_line(line));
  }
  if (rows.empty()) throw FormatError("csv: empty matrix");
  const int n = static_cast<int>(rows.size()) - 1;
  const auto& header = rows.front();
  if (static_cast<int>(header.size()) != n + 1 || !header[0].empty()) throw FormatError("csv: malformed header row");
  for (int j = 0; j < n; ++j)
    if (header[j + 1] != std::to_string(j)) throw FormatError("csv: header column " + std::to_string(j) + " mislabeled");
  TotalColorMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (static_cast<int>(row.size()) != n + 1) throw FormatError("csv: row " + std::to_string(i) + " has wrong width");
    if (row[0] != std::to_string(i)) throw FormatError("csv: row " + std::to_string(i) + " mislabeled");
    for (int j = 0; j < n; ++j) m.at(i, j) = detail::parse_cell(row[j + 1], i, j);
  }
  return m;
}

}  // namespace totalcolor
