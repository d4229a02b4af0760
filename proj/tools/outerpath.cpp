// outerpath: induced-path counts, extremal search and structural checks for
// outerplanar graphs.
//
// Exit status: 0 success / all checks pass, 1 a check failed, 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "outerpath/constructions.hpp"
#include "outerpath/dual.hpp"
#include "outerpath/errors.hpp"
#include "outerpath/outerplanarity.hpp"
#include "outerpath/path_counting.hpp"
#include "outerpath/report.hpp"
#include "outerpath/search.hpp"

namespace op = outerpath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  // First non-empty line; an optional ">>graph6<<" header is skipped.
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (!line.empty()) return line;
  }
  throw UsageError(path + ": no graph6 line found");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct GraphSource {
  std::string kind;
  int n = 0;
  int t = 0;
  std::string g6;
  std::string in;

  void attach(CLI::App* cmd) {
    cmd->add_option("--kind", kind, "Named construction (star, cycle, cycle_pendant, c6_chord, g_t, g_t_prime, double_star)");
    cmd->add_option("--n", n, "Vertex count for the construction");
    cmd->add_option("--t", t, "Path length parameter for g_t / g_t_prime");
    cmd->add_option("--g6", g6, "Graph in graph6");
    cmd->add_option("--in", in, "File holding a graph6 line ('-' for stdin)");
  }

  std::optional<op::Construction> construction() const {
    if (kind.empty()) return std::nullopt;
    return op::build({op::parse_construction_kind(kind), n, t});
  }

  op::Graph graph() const {
    const int given = !kind.empty() + !g6.empty() + !in.empty();
    if (given != 1) throw UsageError("give exactly one of --kind, --g6, --in");
    if (auto c = construction()) return c->graph;
    return op::from_graph6(g6.empty() ? read_input(in) : g6);
  }
};

int cmd_count(const GraphSource& src, int k) {
  const op::Graph g = src.graph();
  std::cout << op::to_json(op::count_induced_paths(g, k), g.vertex_count());
  return kExitOk;
}

int cmd_search(const std::vector<int>& ns, const std::vector<int>& ks, bool witnesses, const std::string& json_path,
               bool csv, int jobs, bool timing) {
  std::vector<op::SearchReport> reports;
  for (int n : ns) {
    for (int k : ks) reports.push_back(op::extremal_value(n, k, {jobs, true}));
  }
  const std::string json = op::to_json(reports, timing, witnesses);
  if (csv) {
    std::cout << op::search_csv_header();
    for (const auto& r : reports) std::cout << op::to_csv_row(r);
    if (!json_path.empty()) write_output(json_path, json);
  } else {
    write_output(json_path, json);
  }
  return kExitOk;
}

int cmd_construct(const GraphSource& src, const std::string& out) {
  if (src.kind.empty()) throw UsageError("construct needs --kind");
  const op::ConstructionSpec spec{op::parse_construction_kind(src.kind), src.n, src.t};
  const op::Construction c = op::build(spec);
  if (out == "g6") {
    std::cout << op::to_graph6(c.graph) << '\n';
  } else if (out == "dot") {
    std::cout << op::to_dot(c.graph, src.kind);
  } else {
    std::cout << op::to_json(c, spec);
  }
  return kExitOk;
}

int cmd_dual(const GraphSource& src, const std::string& order, bool complete, const std::string& out) {
  op::Graph g = src.graph();
  op::OuterEmbedding emb;
  if (!order.empty()) {
    emb = op::parse_order(order);
  } else if (auto c = src.construction()) {
    emb = c->embedding;
  } else {
    emb = op::outer_cycle(g);
  }
  if (!op::verify_embedding(g, emb)) throw UsageError("--order is not an outerplanar embedding of the graph");
  if (complete) g = op::maximal_completion(g, emb);
  const op::DualTree dual = op::weak_dual(g, emb);
  std::cout << (out == "dot" ? dual.to_dot() : op::to_json(dual));
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& only, int jobs, const std::string& json_path, bool timing) {
  const op::VerifyReport report = op::run_verify({only, jobs});
  for (const auto& c : report.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.observed << '\n';
  }
  write_output(json_path, op::to_json(report, timing));
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced paths in outerplanar graphs"};
  app.require_subcommand(1);

  GraphSource src;
  int k = 3;
  int jobs = 0;
  bool timing = false;
  std::string json_path;

  auto* count = app.add_subcommand("count", "Count induced P_k in one graph");
  src.attach(count);
  count->add_option("--k", k, "Path vertex count")->required();

  std::vector<int> search_ns;
  std::vector<int> search_ks{3};
  bool witnesses = false;
  bool csv = false;
  auto* search = app.add_subcommand("search", "Exhaustive extremal search over outerplanar graphs");
  search->add_option("--n", search_ns, "Vertex count(s), 3..8")->required();
  search->add_option("--k", search_ks, "Path vertex count(s)");
  search->add_flag("--witnesses", witnesses, "List canonical graph6 forms of all extremal graphs");
  search->add_option("--json", json_path, "Write the JSON report to FILE instead of stdout");
  search->add_flag("--csv", csv, "Print a CSV table (n,k,max_copies,...) on stdout");
  search->add_option("--jobs", jobs, "Worker threads (default: available cores)");
  search->add_flag("--timing", timing, "Include elapsed_seconds");

  std::string out = "json";
  auto* construct = app.add_subcommand("construct", "Build a named construction");
  src.attach(construct);
  construct->add_option("--out", out, "g6 | dot | json")->check(CLI::IsMember({"g6", "dot", "json"}));

  std::string order;
  bool complete = false;
  auto* dual = app.add_subcommand("dual", "Weak dual tree of a maximal outerplanar graph");
  src.attach(dual);
  dual->add_option("--order", order, "Outer cycle as comma-separated vertices (default: recovered)");
  dual->add_flag("--complete", complete, "Triangulate every bounded face first");
  dual->add_option("--out", out, "dot | json")->check(CLI::IsMember({"dot", "json"}));

  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify-paper", "Run every structural and extremal check");
  verify->add_option("--only", only, "Run only the named check(s)");
  verify->add_option("--jobs", jobs, "Worker threads (default: available cores)");
  verify->add_option("--json", json_path, "Write the JSON report to FILE instead of stdout");
  verify->add_flag("--timing", timing, "Include elapsed_seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(src, k);
    if (*search) return cmd_search(search_ns, search_ks, witnesses, json_path, csv, jobs, timing);
    if (*construct) return cmd_construct(src, out);
    if (*dual) return cmd_dual(src, order, complete, out);
    if (*verify) return cmd_verify(only, jobs, json_path, timing);
  } catch (const op::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const op::UnsupportedSize& e) {
    std::cerr << "error: unsupported size: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
