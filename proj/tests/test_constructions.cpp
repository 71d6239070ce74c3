#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "support/brute_force.hpp"
#include "support/instances.hpp"
#include "totalcolor/cliques.hpp"
#include "totalcolor/coloring_io.hpp"
#include "totalcolor/constructions.hpp"
#include "totalcolor/edge_coloring.hpp"
#include "totalcolor/matching.hpp"
#include "totalcolor/methods.hpp"
#include "totalcolor/tables.hpp"

using namespace totalcolor;

namespace {

bool has_note(const ConstructionResult& r, const std::string& text) {
  return std::any_of(r.notes.begin(), r.notes.end(), [&](const std::string& n) { return n.find(text) != std::string::npos; });
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

}  // namespace

TEST_CASE("complete bipartite construction", "[constructions]") {
  const auto u8 = color_complete_bipartite(build_unitary(8));
  CHECK(u8.colors() == 6);
  CHECK(u8.report.ok());
  CHECK(color_complete_bipartite(1).colors() == 3);
  CHECK(color_complete_bipartite(2).colors() == 4);
  CHECK_THROWS_AS(color_complete_bipartite(cycle_graph(6)), PreconditionError);
  CHECK_THROWS_AS(color_complete_bipartite(complete_graph(3)), PreconditionError);
}

TEST_CASE("unitary even construction", "[constructions]") {
  for (int n : {6, 10, 12, 18, 24, 30, 36, 48, 70, 90}) {
    const auto r = color_unitary_even(n);
    CHECK(r.report.ok());
    CHECK(r.colors() == totient(n) + 1);
  }
  CHECK(color_unitary_even(6).stages.at(1).fragment.edge_colors().empty());
  CHECK_THROWS_AS(color_unitary_even(9), PreconditionError);
  CHECK_THROWS_AS(color_unitary_even(16), PreconditionError);
}

TEST_CASE("U_24 stages reproduce the golden matrices", "[constructions][tables]") {
  const auto tables = unitary_tables(24);
  for (int i = 0; i < 4; ++i) {
    std::ifstream in(std::string(TOTALCOLOR_GOLDEN_DIR) + "/table" + std::to_string(i + 1) + ".csv");
    std::stringstream text;
    text << in.rdbuf();
    CHECK(tables.csv[i] == text.str());
  }
  const auto r = color_unitary_even(24);
  CHECK(r.coloring.edge(0, 5) == 4);
  CHECK(r.coloring.edge(5, 10) == 5);
  CHECK(r.coloring.edge(0, 7) == 6);
  CHECK(r.coloring.edge(0, 11) == 8);
}

TEST_CASE("odd circulant construction", "[constructions]") {
  const auto literal = color_odd_circulant(CirculantSpec(21, {1, 2, 3, 18, 19, 20}));
  CHECK(literal.strategy == "literal");
  CHECK(literal.colors() == 7);

  const CirculantSpec example(21, {1, 3, 4, 17, 18, 20});
  const auto fallback = color_odd_circulant(example);
  CHECK(fallback.strategy == "starter");
  CHECK(fallback.colors() == 7);
  CHECK(has_note(fallback, "starter fallback used"));
  CHECK(partition_from_colors(fallback.coloring) == residue_partition(21, 7));
  CHECK_THROWS_AS(color_odd_circulant(example, Strategy::Literal), ConstructionError);
  CHECK(color_odd_circulant(example, Strategy::Starter).coloring == fallback.coloring);

  const auto k3 = color_odd_circulant(CirculantSpec(3, {1, 2}));
  CHECK(k3.colors() == 3);

  CHECK_THROWS_AS(color_odd_circulant(CirculantSpec(10, {1, 9})), PreconditionError);
  CHECK_THROWS_AS(color_odd_circulant(CirculantSpec(21, {1, 3, 18, 20})), PreconditionError);
  CHECK_THROWS_AS(color_odd_circulant(CirculantSpec(21, {1, 7, 8, 13, 14, 20})), PreconditionError);
  CHECK_THROWS_AS(color_odd_circulant(CirculantSpec(21, {1, 8, 9, 12, 13, 20})), PreconditionError);
}

TEST_CASE("literal rules clash on the three-generator example", "[constructions]") {
  const std::vector<int> cols = {2, 4, 5};
  const auto t = start_entries(7, cols, 21);
  CHECK(t.find(4)->start == 6);
  CHECK(t.find(5)->wrap == 6);
}

TEST_CASE("even dense construction", "[constructions]") {
  const auto a = color_even_dense_circulant(CirculantSpec(10, {1, 2, 3, 7, 8, 9}));
  CHECK(a.colors() == 7);
  CHECK(has_note(a, "H {1,2}: accepted"));
  CHECK(has_note(a, "pair {3,2}"));
  CHECK(has_note(a, "pair {1,4}"));

  const auto b = color_even_dense_circulant(CirculantSpec(10, {1, 3, 4, 6, 7, 9}));
  CHECK(b.colors() == 7);
  CHECK(has_note(b, "H {1,3}: rejected"));
  CHECK(has_note(b, "H {1,4}: accepted"));

  const auto c = color_even_dense_circulant(CirculantSpec(6, {1, 2, 4, 5}));
  CHECK(c.colors() == 5);
  CHECK(has_note(c, "complement connected: no"));

  CHECK_THROWS_AS(color_even_dense_circulant(CirculantSpec(8, {1, 2, 3, 5, 6, 7})), PreconditionError);
  CHECK_THROWS_AS(color_even_dense_circulant(CirculantSpec(10, {1, 9})), PreconditionError);
  CHECK_THROWS_AS(color_even_dense_circulant(CirculantSpec(10, {1, 2, 5, 8, 9})), PreconditionError);
}

TEST_CASE("complete odd construction", "[constructions]") {
  CHECK(color_complete_odd(1).colors() == 1);
  CHECK(color_complete_odd(3).colors() == 3);
  CHECK(color_complete_odd(5).colors() == 5);
  CHECK_THROWS_AS(color_complete_odd(4), PreconditionError);
}

TEST_CASE("edge colorings", "[edge-coloring]") {
  const auto c6 = edge_color_bipartite(cycle_graph(6));
  CHECK(is_proper_edge_coloring(cycle_graph(6), c6));
  CHECK(c6.colors_used == 2);
  CHECK(edge_color_bipartite(complete_bipartite(3)).colors_used == 3);
  CHECK(edge_color_bipartite(star(4)).colors_used == 4);
  CHECK_THROWS_AS(edge_color_bipartite(complete_graph(3)), PreconditionError);

  CHECK(edge_color_vizing(complete_graph(4)).colors_used == 3);
  const auto c5 = edge_color_vizing(cycle_graph(5));
  CHECK(c5.colors_used == 3);
  CHECK_FALSE(c5.achieved_max_degree);
  const auto pet = edge_color_vizing(petersen_graph());
  CHECK(is_proper_edge_coloring(petersen_graph(), pet));
  CHECK(pet.colors_used == 4);
}

TEST_CASE("edge colorings stay within bounds", "[edge-coloring][property]") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 30);
    const auto g = build_circulant(CirculantSpec(n, brute::random_connection(n, rng)));
    const auto ec = edge_color_vizing(g);
    REQUIRE(is_proper_edge_coloring(g, ec));
    CHECK(ec.colors_used <= g.max_degree() + 1);
    if (bipartition(g)) {
      const auto bc = edge_color_bipartite(g);
      REQUIRE(is_proper_edge_coloring(g, bc));
      CHECK(bc.colors_used == g.max_degree());
    }
  }
}

TEST_CASE("matchings", "[matching]") {
  const auto co = complement(build_circulant(CirculantSpec(10, {1, 2, 5, 8, 9})));
  const auto m = perfect_matching(co);
  REQUIRE(m);
  CHECK(m->edges.size() == 5);
  CHECK(m->perfect_for(co));
  const auto c6 = perfect_matching(cycle_graph(6));
  REQUIRE(c6);
  CHECK(c6->edges.size() == 3);
  CHECK_FALSE(perfect_matching(cycle_graph(7)));
  CHECK(maximum_matching(cycle_graph(7)).edges.size() == 3);
  CHECK_FALSE(perfect_matching(star(3)));
}

TEST_CASE("disjoint clique covers", "[cliques]") {
  const auto u9 = clique_cover_disjoint(build_unitary(9));
  REQUIRE(u9);
  CHECK(u9->cliques == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  const auto k6 = clique_cover_disjoint(complete_graph(6));
  REQUIRE(k6);
  CHECK(k6->cliques == std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}});
  CHECK_THROWS_AS(clique_cover_disjoint(cycle_graph(5)), PreconditionError);
  // Petersen: omega 2 divides 10 and a perfect matching exists.
  CHECK(clique_cover_disjoint(petersen_graph()));
}

TEST_CASE("perfect Cayley construction", "[constructions]") {
  const auto u9 = color_perfect_cayley(build_unitary(9));
  CHECK(u9.report.ok());
  CHECK(u9.colors() <= 8);
  CHECK(has_note(u9, "3 disjoint maximum cliques"));
  // Remainder is 4-regular on 9 vertices; an odd-order regular graph is class II.
  CHECK(has_note(u9, "class II"));
  CHECK(u9.colors() == 8);

  CHECK(color_perfect_cayley(complete_graph(5)).colors() == 5);
  CHECK_THROWS_AS(color_perfect_cayley(cycle_graph(9)), PreconditionError);
  CHECK_THROWS_AS(color_perfect_cayley(cycle_graph(6)), PreconditionError);  // chi = 2
}

TEST_CASE("method selection", "[methods]") {
  CHECK(select_method(build_unitary(8)).method == Method::CompleteBipartite);
  CHECK(select_method(build_unitary(24)).method == Method::UnitaryEven);
  CHECK(select_method(build_circulant(CirculantSpec(21, {1, 3, 4, 17, 18, 20}))).method == Method::OddCirculant);
  CHECK(select_method(build_circulant(CirculantSpec(10, {1, 2, 3, 7, 8, 9}))).method ==
        Method::EvenDenseCirculant);
  CHECK(select_method(build_unitary(9)).method == Method::PerfectCayley);
  CHECK_FALSE(select_method(cycle_graph(5)).method);
  CHECK_THROWS_AS(construct(cycle_graph(5), Method::Auto), PreconditionError);
  CHECK_THROWS_AS(construct(build_unitary(9), Method::UnitaryEven), PreconditionError);
}

TEST_CASE("constructions verify on randomized admissible instances", "[constructions][property]") {
  std::mt19937 rng(2024);
  std::map<std::string, int> counts;
  int produced = 0;
  while (produced < 200) {
    const auto draw = instances::random_admissible(produced % 6, rng);
    if (!draw) continue;
    INFO(draw->label);
    const auto& r = draw->result;
    REQUIRE(verify_total(r.graph, r.coloring).ok());
    REQUIRE(brute::proper_total(r.graph, r.coloring));
    if (draw->expected_colors > 0) CHECK(r.colors() == draw->expected_colors);
    CHECK(r.colors() <= r.graph.max_degree() + 2);
    ++counts[r.method];
    ++produced;
  }
  CHECK(counts.size() == 6);
}

TEST_CASE("constructions are deterministic", "[constructions][property]") {
  const std::vector<Graph> graphs = {build_unitary(8), build_unitary(24),
                                     build_circulant(CirculantSpec(21, {1, 3, 4, 17, 18, 20})),
                                     build_circulant(CirculantSpec(10, {1, 3, 4, 6, 7, 9})), build_unitary(9)};
  for (const auto& g : graphs) {
    const auto a = construct(g, Method::Auto);
    const auto b = construct(g, Method::Auto);
    CHECK(to_coloring_text(a.coloring) == to_coloring_text(b.coloring));
    CHECK(a.notes == b.notes);
  }
}
