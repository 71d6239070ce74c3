// Command-line front end: gen | color | verify | oracle | classify | tables.
//
// Exit codes: 0 success, 1 verification conflicts (or table diff), 2 method
// preconditions unmet, 3 inconclusive search budget, 4 I/O or format error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "totalcolor/totalcolor.hpp"

#ifndef TOTALCOLOR_GOLDEN_DIR
#define TOTALCOLOR_GOLDEN_DIR "data/golden"
#endif

namespace tc = totalcolor;

namespace {

constexpr int kOk = 0;
constexpr int kConflicts = 1;
constexpr int kPrecondition = 2;
constexpr int kInconclusive = 3;
constexpr int kIoError = 4;

struct BudgetFlags {
  int max_colors = 63;
  std::uint64_t node_limit = 5'000'000'000ULL;
  double time_limit_secs = 600.0;

  tc::SearchBudget budget() const { return {max_colors, node_limit, time_limit_secs}; }

  void attach(CLI::App* app) {
    app->add_option("--max-colors", max_colors, "Largest color count the exact search may try")->check(CLI::Range(1, 64));
    app->add_option("--node-limit", node_limit, "Search node budget");
    app->add_option("--time-limit-secs", time_limit_secs, "Wall-clock budget in seconds");
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tc::FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

tc::Graph load_graph(const std::string& path) {
  std::istringstream in(read_file(path));
  return tc::read_dimacs(in);
}

/// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tc::FormatError("cannot write " + path);
  out << text;
}

bool looks_like_csv(const std::string& path, const std::string& text) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return true;
  return !text.empty() && text.front() == ',';
}

std::string report_text(const tc::Graph& g, const tc::VerificationReport& report) {
  std::ostringstream out;
  out << "vertices: " << g.n() << "\nedges: " << g.edge_count() << "\nmax-degree: " << g.max_degree()
      << "\ncolors: " << report.colors_used << "\nconflicts: " << report.conflicts.size()
      << "\ncoverage-issues: " << report.coverage.size() << '\n';
  for (const auto& c : report.coverage) out << "coverage " << tc::describe(c) << '\n';
  for (const auto& c : report.conflicts) out << "conflict " << tc::describe(c) << '\n';
  out << "status: " << (report.ok() ? "ok" : "FAILED") << '\n';
  return out.str();
}

const std::map<std::string, tc::Method>& method_names() {
  static const std::map<std::string, tc::Method> names{
      {"auto", tc::Method::Auto},
      {"complete-bipartite", tc::Method::CompleteBipartite},
      {"unitary-even", tc::Method::UnitaryEven},
      {"odd-circulant", tc::Method::OddCirculant},
      {"even-dense", tc::Method::EvenDenseCirculant},
      {"perfect-cayley", tc::Method::PerfectCayley},
  };
  return names;
}

tc::GroupTable parse_group(const std::string& group, const std::string& table_path) {
  if (!table_path.empty()) {
    std::istringstream in(read_file(table_path));
    int n = 0;
    if (!(in >> n) || n < 1) throw tc::FormatError("group table: expected order on first line");
    std::vector<int> product(static_cast<std::size_t>(n) * n);
    for (auto& x : product)
      if (!(in >> x)) throw tc::FormatError("group table: expected " + std::to_string(n * n) + " entries");
    return tc::GroupTable(n, std::move(product));
  }
  const auto colon = group.find(':');
  if (colon == std::string::npos) throw tc::FormatError("--group expects cyclic:N or dihedral:K");
  const std::string kind = group.substr(0, colon);
  const int order = std::stoi(group.substr(colon + 1));
  if (kind == "cyclic") return tc::GroupTable::cyclic(order);
  if (kind == "dihedral") return tc::GroupTable::dihedral(order);
  throw tc::FormatError("unknown group family `" + kind + "`");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total colorings of Cayley and circulant graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Write a graph in DIMACS format");
  gen->require_subcommand(1);
  std::string gen_output;
  gen->add_option("-o,--output", gen_output, "Output path (default stdout)");
  int unitary_n = 0;
  auto* gen_unitary = gen->add_subcommand("unitary", "Unitary Cayley graph U_n");
  gen_unitary->add_option("n", unitary_n)->required();
  int circ_n = 0;
  std::vector<int> circ_conn;
  auto* gen_circ = gen->add_subcommand("circulant", "Circulant graph on Z_n");
  gen_circ->add_option("n", circ_n)->required();
  gen_circ->add_option("connection", circ_conn, "Symmetric connection set");
  std::string cay_group, cay_table;
  std::vector<int> cay_gens;
  auto* gen_cay = gen->add_subcommand("cayley", "Cayley graph of a finite group");
  gen_cay->add_option("--group", cay_group, "cyclic:N or dihedral:K");
  gen_cay->add_option("--table", cay_table, "Multiplication table file (order, then order^2 entries)");
  gen_cay->add_option("generators", cay_gens, "Symmetric generating set");
  for (auto* sub : {gen_unitary, gen_circ, gen_cay}) sub->fallthrough();

  // color
  auto* color = app.add_subcommand("color", "Run a construction and verify its output");
  std::string color_input, color_output, color_report, method_name = "auto", strategy_name = "auto",
                                                      format = "coloring";
  BudgetFlags color_budget;
  color->add_option("graph", color_input, "DIMACS graph")->required();
  color->add_option("--method", method_name, "auto | complete-bipartite | unitary-even | odd-circulant | "
                                              "even-dense | perfect-cayley");
  color->add_option("--strategy", strategy_name, "literal | starter | auto")
      ->check(CLI::IsMember({"literal", "starter", "auto"}));
  color->add_option("-o,--output", color_output, "Coloring output (default stdout)");
  color->add_option("--format", format, "coloring | csv-matrix")->check(CLI::IsMember({"coloring", "csv-matrix"}));
  color->add_option("--report", color_report, "Report output (default stderr)");
  color_budget.attach(color);

  // verify
  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  std::string verify_graph, verify_coloring, verify_format = "auto";
  verify->add_option("graph", verify_graph)->required();
  verify->add_option("coloring", verify_coloring, "Coloring file or CSV matrix")->required();
  verify->add_option("--format", verify_format, "auto | coloring | csv-matrix")
      ->check(CLI::IsMember({"auto", "coloring", "csv-matrix"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact desk-scale solvers");
  std::string oracle_graph, problem = "total", oracle_output;
  int classes = 0;
  BudgetFlags oracle_budget;
  oracle->add_option("graph", oracle_graph)->required();
  oracle->add_option("--problem", problem, "total | chromatic | cliques | perfect | conformable")
      ->check(CLI::IsMember({"total", "chromatic", "cliques", "perfect", "conformable"}));
  oracle->add_option("--classes", classes, "Class count for --problem conformable (default degree + 1)");
  oracle->add_option("-o,--output", oracle_output, "Certificate output");
  oracle_budget.attach(oracle);

  // classify
  auto* classify = app.add_subcommand("classify", "Type I / type II classification with evidence");
  std::string classify_graph, classify_output;
  BudgetFlags classify_budget;
  classify->add_option("graph", classify_graph)->required();
  classify->add_option("-o,--output", classify_output, "Certificate output");
  classify_budget.attach(classify);

  // tables
  auto* tables = app.add_subcommand("tables", "Regenerate the U_24 matrices and diff against golden CSVs");
  std::string tables_input, golden_dir = TOTALCOLOR_GOLDEN_DIR, tables_out;
  tables->add_option("--input", tables_input, "Unitary graph in DIMACS format (default U_24)");
  tables->add_option("--golden-dir", golden_dir, "Directory holding table1.csv .. table4.csv");
  tables->add_option("--output-dir", tables_out, "Also write the regenerated CSVs here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      tc::Graph g;
      if (gen_unitary->parsed()) g = tc::build_unitary(unitary_n);
      else if (gen_circ->parsed()) g = tc::build_circulant(tc::CirculantSpec(circ_n, circ_conn));
      else g = tc::build_cayley(parse_group(cay_group, cay_table), cay_gens);
      std::ostringstream out;
      tc::write_dimacs(out, g);
      emit(gen_output, out.str());
      return kOk;
    }

    if (color->parsed()) {
      const auto g = load_graph(color_input);
      const auto found = method_names().find(method_name);
      if (found == method_names().end()) throw tc::PreconditionError("unknown method `" + method_name + "`");
      tc::MethodOptions options;
      options.strategy = strategy_name == "literal"   ? tc::Strategy::Literal
                         : strategy_name == "starter" ? tc::Strategy::Starter
                                                      : tc::Strategy::Auto;
      options.budget = color_budget.budget();
      const auto result = tc::construct(g, found->second, options);
      std::ostringstream body;
      if (format == "csv-matrix") tc::write_matrix_csv(body, tc::render_matrix(g, result.coloring));
      else tc::write_coloring(body, result.coloring);
      emit(color_output, body.str());
      std::ostringstream report;
      report << "method: " << result.method << '\n';
      if (!result.strategy.empty()) report << "strategy: " << result.strategy << '\n';
      for (const auto& note : result.notes) report << "note: " << note << '\n';
      report << report_text(g, result.report);
      if (color_report.empty()) std::cerr << report.str();
      else emit(color_report, report.str());
      return result.report.ok() ? kOk : kConflicts;
    }

    if (verify->parsed()) {
      const auto g = load_graph(verify_graph);
      const std::string text = read_file(verify_coloring);
      std::istringstream in(text);
      const bool csv = verify_format == "csv-matrix" || (verify_format == "auto" && looks_like_csv(verify_coloring, text));
      const auto coloring = csv ? tc::parse_matrix(tc::read_matrix_csv(in)) : tc::read_coloring(in);
      const auto report = tc::verify_total(g, coloring);
      std::cout << report_text(g, report);
      return report.ok() ? kOk : kConflicts;
    }

    if (oracle->parsed()) {
      const auto g = load_graph(oracle_graph);
      const auto budget = oracle_budget.budget();
      if (problem == "total") {
        const auto r = tc::exact_total_chromatic(g, budget);
        std::cout << "max-degree: " << g.max_degree() << "\nrefuted:";
        for (int c : r.refuted) std::cout << ' ' << c;
        std::cout << "\nnodes: " << r.nodes << '\n';
        if (!r.exact) {
          std::cout << "total-chromatic: inconclusive (lower bound " << r.lower_bound << ")\n";
          return kInconclusive;
        }
        std::cout << "total-chromatic: " << *r.value << '\n';
        if (!oracle_output.empty()) emit(oracle_output, tc::to_coloring_text(*r.certificate));
        return kOk;
      }
      if (problem == "chromatic") {
        const auto r = tc::exact_chromatic(g, budget);
        if (!r.exact) {
          std::cout << "chromatic: inconclusive\n";
          return kInconclusive;
        }
        std::cout << "chromatic: " << *r.value << "\ncoloring:";
        for (int c : r.coloring) std::cout << ' ' << c;
        std::cout << '\n';
        return kOk;
      }
      if (problem == "cliques") {
        const auto census = tc::maximal_cliques(g);
        std::cout << "omega: " << census.omega << "\nmaximal-cliques: " << census.maximal_count
                  << "\nmaximum-cliques: " << census.maximum_count << '\n';
        for (const auto& q : census.maximal) std::cout << "clique " << tc::detail::join(q) << '\n';
        return kOk;
      }
      if (problem == "perfect") {
        const auto r = tc::is_perfect(g);
        if (!r.perfect) {
          std::cout << "perfect: inconclusive (graph too large)\n";
          return kInconclusive;
        }
        std::cout << "perfect: " << (*r.perfect ? "true" : "false") << '\n';
        if (!r.odd_hole.empty()) std::cout << "odd-hole " << tc::detail::join(r.odd_hole) << '\n';
        if (!r.odd_antihole.empty()) std::cout << "odd-antihole " << tc::detail::join(r.odd_antihole) << '\n';
        return kOk;
      }
      const int q = classes > 0 ? classes : g.max_degree() + 1;
      const auto r = tc::conformable_exists(g, q, budget);
      std::cout << "conformable(" << q << "): " << tc::to_string(r.outcome) << "\nnodes: " << r.nodes << '\n';
      if (r.certificate) {
        for (const auto& cls : r.certificate->classes) std::cout << "class " << tc::detail::join(cls) << '\n';
      }
      return r.outcome == tc::SearchOutcome::Inconclusive ? kInconclusive : kOk;
    }

    if (classify->parsed()) {
      const auto g = load_graph(classify_graph);
      const auto c = tc::classify_type(g, classify_budget.budget());
      std::cout << "type: " << tc::to_string(c.type) << "\nmax-degree: " << c.max_degree << '\n';
      for (const auto& line : c.evidence) std::cout << "evidence: " << line << '\n';
      if (c.certificate) {
        std::cout << "certificate-colors: " << tc::color_count(*c.certificate) << '\n';
        if (!classify_output.empty()) emit(classify_output, tc::to_coloring_text(*c.certificate));
      }
      return c.type == tc::TotalType::Inconclusive ? kInconclusive : kOk;
    }

    if (tables->parsed()) {
      int n = 24;
      if (!tables_input.empty()) {
        const auto g = load_graph(tables_input);
        if (!g.circulant() || !(*g.circulant() == tc::unitary_spec(g.n()))) {
          throw tc::PreconditionError("tables: input is not a unitary Cayley graph");
        }
        n = g.n();
      }
      const auto regenerated = tc::unitary_tables(n);
      int differing = 0;
      for (int i = 0; i < 4; ++i) {
        const std::string name = "table" + std::to_string(i + 1) + ".csv";
        if (!tables_out.empty()) {
          std::filesystem::create_directories(tables_out);
          emit((std::filesystem::path(tables_out) / name).string(), regenerated.csv[i]);
        }
        const std::string golden = read_file((std::filesystem::path(golden_dir) / name).string());
        if (golden == regenerated.csv[i]) {
          std::cout << name << ": identical\n";
          continue;
        }
        ++differing;
        std::istringstream a(golden), b(regenerated.csv[i]);
        std::string la, lb;
        int line = 0;
        while (true) {
          const bool ga = static_cast<bool>(std::getline(a, la));
          const bool gb = static_cast<bool>(std::getline(b, lb));
          if (!ga && !gb) break;
          ++line;
          if (!ga || !gb || la != lb) std::cout << name << ":" << line << ": golden `" << la << "` regenerated `" << lb << "`\n";
        }
      }
      std::cout << (differing == 0 ? "tables: zero diff\n" : "tables: " + std::to_string(differing) + " differ\n");
      return differing == 0 ? kOk : kConflicts;
    }
  } catch (const tc::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const tc::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const tc::ConstructionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConflicts;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}
