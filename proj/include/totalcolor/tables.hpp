#pragma once

#include <array>
#include <sstream>
#include <string>

#include "totalcolor/coloring_io.hpp"
#include "totalcolor/constructions.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

/// CSV renderings of the unitary-even construction for U_n: adjacency,
/// part 1 (vertices plus diagonal factors), part 2 (remaining factors,
/// blank diagonal) and the final matrix.
struct UnitaryTables {
  std::array<std::string, 4> csv;
};

inline UnitaryTables unitary_tables(int n) {
  const auto built = color_unitary_even(n);
  auto render = [](auto&& write) {
    std::ostringstream out;
    write(out);
    return out.str();
  };
  UnitaryTables t;
  t.csv[0] = render([&](std::ostream& o) { write_adjacency_csv(o, built.graph); });
  t.csv[1] = render([&](std::ostream& o) { write_matrix_csv(o, to_matrix(built.stages.at(0).fragment)); });
  t.csv[2] = render([&](std::ostream& o) { write_matrix_csv(o, to_matrix(built.stages.at(1).fragment)); });
  t.csv[3] = render([&](std::ostream& o) { write_matrix_csv(o, render_matrix(built.graph, built.coloring)); });
  return t;
}

}  // namespace totalcolor
