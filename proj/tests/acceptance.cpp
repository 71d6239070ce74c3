// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/brute_force.hpp"
#include "support/instances.hpp"
#include "totalcolor/totalcolor.hpp"

using namespace totalcolor;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void expect(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok: " : "FAILED: ") + what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

int run(const std::string& args, const std::string& log) {
  const std::string cmd = std::string("\"") + TOTALCOLOR_CLI + "\" " + args + " > " + log + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool has_note(const ConstructionResult& r, const std::string& text) {
  for (const auto& n : r.notes)
    if (n.find(text) != std::string::npos) return true;
  return false;
}

TotalColorMatrix golden(int index) {
  std::ifstream in(std::string(TOTALCOLOR_GOLDEN_DIR) + "/table" + std::to_string(index) + ".csv");
  return read_matrix_csv(in);
}

Outcome tables() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const int gen = run("gen unitary 24 -o acc_u24.dimacs", "acc_gen.log");
  const int diff = run("tables --input acc_u24.dimacs --golden-dir \"" TOTALCOLOR_GOLDEN_DIR "\"", "acc_tables.log");
  const double elapsed = seconds_since(start);
  o.expect(gen == 0, "gen unitary 24 exit " + std::to_string(gen));
  o.expect(diff == 0, "tables exit " + std::to_string(diff));
  const auto log = slurp("acc_tables.log");
  for (int i = 1; i <= 4; ++i)
    o.expect(log.find("table" + std::to_string(i) + ".csv: identical") != std::string::npos,
             "table" + std::to_string(i) + ".csv identical");
  o.expect(log.find("tables: zero diff") != std::string::npos, "zero diff reported");
  o.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s < 1 s");

  // Table 4 is the union of the two parts, which share only the diagonal.
  const auto t2 = golden(2), t3 = golden(3), t4 = golden(4);
  bool union_ok = true;
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      if (i == j) {
        union_ok &= t4.at(i, i) == t2.at(i, i);
        continue;
      }
      union_ok &= !(t2.at(i, j) && t3.at(i, j));
      union_ok &= t4.at(i, j) == (t2.at(i, j) ? t2.at(i, j) : t3.at(i, j));
    }
  o.expect(union_ok, "table 4 = table 2 + table 3 cellwise");
  const auto g = build_unitary(24);
  const auto report = verify_total(g, parse_matrix(t4, g));
  o.expect(report.ok() && report.colors_used == 9, "golden table 4 verifies with 9 colors");
  return o;
}

Outcome unitary_counts() {
  Outcome o;
  for (int n : {6, 12, 18, 24, 36, 48}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = color_unitary_even(n);
    const double elapsed = seconds_since(start);
    const int expected = brute::totient(n) + 1;
    o.expect(verify_total(r.graph, r.coloring).ok() && r.colors() == expected && elapsed < 1.0,
             "U_" + std::to_string(n) + ": " + std::to_string(r.colors()) + " colors (expected " +
                 std::to_string(expected) + "), " + std::to_string(elapsed) + " s");
  }
  return o;
}

Outcome u8_exact() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto g = build_unitary(8);
  const auto r = color_complete_bipartite(g);
  o.expect(r.report.ok() && r.colors() == 6, "construction gives " + std::to_string(r.colors()) + " colors");
  const auto five = total_colorable(g, 5);
  o.expect(five.outcome == SearchOutcome::Infeasible,
           std::string("5 colors: ") + to_string(five.outcome) + " after " + std::to_string(five.nodes) + " nodes");
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 300.0, "runtime " + std::to_string(elapsed) + " s < 300 s");
  return o;
}

Outcome u9_type1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto g = build_unitary(9);
  const auto r = total_colorable(g, 7);
  o.expect(r.outcome == SearchOutcome::Feasible,
           std::string("7 colors: ") + to_string(r.outcome) + " after " + std::to_string(r.nodes) + " nodes");
  o.expect(r.certificate && verify_total(g, *r.certificate).ok() && brute::proper_total(g, *r.certificate),
           "certificate verifies");
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 600.0, "runtime " + std::to_string(elapsed) + " s < 600 s");
  return o;
}

Outcome odd_example() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto r = color_odd_circulant(CirculantSpec(21, {1, 3, 4, 17, 18, 20}));
  const double elapsed = seconds_since(start);
  o.expect(verify_total(r.graph, r.coloring).ok() && r.colors() == 7, std::to_string(r.colors()) + " colors");
  o.expect(partition_from_colors(r.coloring) == residue_partition(21, 7), "vertex classes (0,7,14), (1,8,15), ...");
  o.expect(r.strategy == "starter" && has_note(r, "starter fallback used"), "report records the starter fallback");
  o.expect(has_note(r, "literal rules failed"), "literal rules recorded as failing");
  o.expect(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s < 10 s");
  return o;
}

Outcome odd_literal() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto r = color_odd_circulant(CirculantSpec(21, {1, 2, 3, 18, 19, 20}), Strategy::Literal);
  const double elapsed = seconds_since(start);
  o.expect(verify_total(r.graph, r.coloring).ok() && r.colors() == 7, std::to_string(r.colors()) + " colors");
  o.expect(r.strategy == "literal", "strategy " + r.strategy);
  o.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s < 1 s");
  return o;
}

Outcome even_dense() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto r = color_even_dense_circulant(CirculantSpec(10, {1, 2, 3, 7, 8, 9}));
  o.expect(verify_total(r.graph, r.coloring).ok() && r.colors() == 7, std::to_string(r.colors()) + " colors");
  o.expect(has_note(r, "H {1,2}: accepted"), "H-selection diagnostics emitted");

  const CirculantSpec control(10, {1, 3, 4, 6, 7, 9});
  const auto c = color_even_dense_circulant(control);
  std::string chosen;
  for (const auto& n : c.notes)
    if (n.find(": accepted") != std::string::npos) chosen = n.substr(0, n.find(':'));
  o.expect(verify_total(c.graph, c.coloring).ok() && c.colors() == 7, "control: " + std::to_string(c.colors()) + " colors with " + chosen);
  o.expect(chosen.find('4') != std::string::npos, "control: accepted H contains generator 4");
  // Leaving generator 4 outside H leaves two 5-cycles, which need 3 > 2 edge colors.
  std::vector<Edge> h;
  for (int s : {1, 3})
    for (int i = 0; i < 10; ++i) h.push_back(make_edge(i, (i + s) % 10));
  const auto remainder = remove_edges(build_circulant(control), h);
  const auto ec = edge_color_vizing(remainder);
  o.expect(!bipartition(remainder) && remainder.regular_degree() == 2 && ec.colors_used == 3,
           "control: H {1,3} remainder is odd cycles needing " + std::to_string(ec.colors_used) + " colors");
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s < 10 s");
  return o;
}

Outcome z9_chain() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto g = build_circulant(CirculantSpec(9, {1, 2, 3, 6, 7, 8}));
  const auto census = maximal_cliques(g);
  o.expect(census.omega == 4 && census.omega * 3 > 9, "omega " + std::to_string(census.omega) + " > n/3");
  o.expect(census.maximum_count == 9, "maximum cliques " + std::to_string(census.maximum_count) +
                                          " (maximal cliques " + std::to_string(census.maximal_count) + ")");
  const auto conf = conformable_exists(g, 7);
  o.expect(conf.outcome == SearchOutcome::Infeasible, std::string("conformable(7): ") + to_string(conf.outcome));
  const auto exact = exact_total_chromatic(g);
  o.expect(exact.exact && exact.value == 8, "total chromatic number " + (exact.value ? std::to_string(*exact.value) : "?"));
  const auto cls = classify_type(g);
  o.expect(cls.type == TotalType::TypeII, std::string("classify: ") + to_string(cls.type));
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 300.0, "runtime " + std::to_string(elapsed) + " s < 300 s");
  return o;
}

Outcome u9_pipeline() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto g = build_unitary(9);
  o.expect(is_perfect(g).perfect.value_or(false), "perfect");
  const auto chi = exact_chromatic(g);
  o.expect(chi.exact && chi.value == 3, "chromatic number 3 (odd, divides 9)");
  const auto cover = clique_cover_disjoint(g);
  bool triangles = cover && cover->cliques.size() == 3;
  if (cover)
    for (const auto& q : cover->cliques) triangles &= q.size() == 3 && is_clique(g, q);
  o.expect(triangles, "clique cover of three triangles");
  const auto r = color_perfect_cayley(g);
  o.expect(verify_total(g, r.coloring).ok() && r.colors() <= 8, std::to_string(r.colors()) + " colors (<= 8)");
  const bool class_one = has_note(r, "(class I)");
  o.expect((r.colors() == 7) == class_one, std::string("remainder ") + (class_one ? "class I" : "class II") +
                                               ", total " + std::to_string(r.colors()));
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s < 60 s");
  return o;
}

Outcome properties() {
  Outcome o;

  // (a) randomized admissible instances
  std::mt19937 rng(20240601);
  int produced = 0, verified = 0;
  while (produced < 200) {
    std::optional<instances::Draw> draw;
    try {
      draw = instances::random_admissible(produced % 6, rng);
    } catch (const Error& e) {
      o.expect(false, std::string("(a) construction threw: ") + e.what());
      ++produced;
      continue;
    }
    if (!draw) continue;
    ++produced;
    const auto& r = draw->result;
    const bool ok = verify_total(r.graph, r.coloring).ok() &&
                    (draw->expected_colors == 0 || r.colors() == draw->expected_colors) &&
                    r.colors() <= r.graph.max_degree() + 2;
    verified += ok;
    if (!ok) o.expect(false, "(a) " + draw->label);
  }
  o.expect(verified == 200, "(a) " + std::to_string(verified) + "/200 randomized constructions verify");

  // (b) start/wrap difference identity
  bool identity = true;
  for (int q = 3; q <= 101; q += 2) {
    std::vector<int> cols;
    for (int j = 1; j <= q + 1; ++j) cols.push_back(j);
    for (const auto& e : start_entries(q, cols, 2 * q).entries)
      identity &= ((e.start - e.wrap - (e.column - 1)) % q + q) % q == 0;
  }
  o.expect(identity, "(b) start(j) - wrap(j) = j - 1 (mod q) for odd q <= 101");

  // (c) oracle value <= construction count, equal on type-I instances
  struct Agreement {
    std::string label;
    Graph graph;
    bool type1;
  };
  const std::vector<Agreement> cases = {
      {"U_8", build_unitary(8), false},
      {"U_6", build_unitary(6), true},
      {"U_12", build_unitary(12), true},
      {"U_18", build_unitary(18), true},
      {"U_24", build_unitary(24), true},
      {"Z_21 {1,3,4,17,18,20}", build_circulant(CirculantSpec(21, {1, 3, 4, 17, 18, 20})), true},
      {"Z_21 {1,2,3,18,19,20}", build_circulant(CirculantSpec(21, {1, 2, 3, 18, 19, 20})), true},
      {"Z_10 {1,2,3,7,8,9}", build_circulant(CirculantSpec(10, {1, 2, 3, 7, 8, 9})), true},
      {"Z_10 {1,3,4,6,7,9}", build_circulant(CirculantSpec(10, {1, 3, 4, 6, 7, 9})), true},
      {"U_9", build_unitary(9), false},
  };
  SearchBudget budget;
  budget.time_limit_secs = 60;
  for (const auto& c : cases) {
    const auto built = construct(c.graph, Method::Auto);
    const auto exact = exact_total_chromatic(c.graph, budget);
    bool ok = exact.exact && *exact.value <= built.colors();
    if (c.type1) ok = ok && *exact.value == built.colors() && built.colors() == c.graph.max_degree() + 1;
    o.expect(ok, "(c) " + c.label + ": construction " + std::to_string(built.colors()) + ", oracle " +
                     (exact.value ? std::to_string(*exact.value) : "inconclusive"));
  }

  // (d) byte determinism of serialized artifacts, library and CLI
  auto serialize = [&] {
    std::ostringstream out;
    for (const auto& c : cases) {
      const auto coloring = construct(c.graph, Method::Auto).coloring;
      write_dimacs(out, c.graph);
      write_coloring(out, coloring);
      write_matrix_csv(out, to_matrix(coloring));
    }
    return out.str();
  };
  bool same = serialize() == serialize();
  const std::string cli_runs[] = {"gen circulant 21 1 3 4 17 18 20 -o acc_det.dimacs",
                                  "color acc_det.dimacs -o acc_det_1.col --report acc_det_1.txt",
                                  "color acc_det.dimacs -o acc_det_2.col --report acc_det_2.txt",
                                  "color acc_det.dimacs --format csv-matrix -o acc_det_1.csv",
                                  "color acc_det.dimacs --format csv-matrix -o acc_det_2.csv",
                                  "tables --output-dir acc_tables_1",
                                  "tables --output-dir acc_tables_2"};
  bool cli_ok = true;
  std::filesystem::create_directories("acc_tables_1");
  std::filesystem::create_directories("acc_tables_2");
  for (const auto& args : cli_runs) cli_ok &= run(args, "acc_det.log") == 0;
  same &= cli_ok && slurp("acc_det_1.col") == slurp("acc_det_2.col") && !slurp("acc_det_1.col").empty();
  same &= slurp("acc_det_1.txt") == slurp("acc_det_2.txt");
  same &= slurp("acc_det_1.csv") == slurp("acc_det_2.csv");
  for (int i = 1; i <= 4; ++i) {
    const std::string name = "/table" + std::to_string(i) + ".csv";
    same &= slurp("acc_tables_1" + name) == slurp("acc_tables_2" + name) && !slurp("acc_tables_1" + name).empty();
  }
  o.expect(same, "(d) serialized artifacts byte-identical across runs");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table reproduction for U_24", tables},
      {"unitary even color counts", unitary_counts},
      {"U_8 needs max degree + 2", u8_exact},
      {"U_9 is type I", u9_type1},
      {"odd circulant via starter fallback", odd_example},
      {"odd circulant via literal rules", odd_literal},
      {"even dense circulant and H selection", even_dense},
      {"Z_9 type II chain", z9_chain},
      {"U_9 perfect Cayley pipeline", u9_pipeline},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    std::printf("%s %zu: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), elapsed);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
