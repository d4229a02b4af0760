#include "outerpath/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "outerpath/errors.hpp"

namespace outerpath {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Extremal values are shared by several checks within one run.
class SearchCache {
 public:
  explicit SearchCache(int jobs) : jobs_(jobs) {}

  const SearchReport& get(int n, int k) {
    auto it = cache_.find({n, k});
    if (it == cache_.end()) it = cache_.emplace(std::pair{n, k}, extremal_value(n, k, {jobs_, true})).first;
    return it->second;
  }
  int jobs() const { return jobs_; }

 private:
  int jobs_;
  std::map<std::pair<int, int>, SearchReport> cache_;
};

struct Outcome {
  bool passed = false;
  std::string observed;
  std::string expected;
};

struct CheckDef {
  std::string_view name;
  std::string_view claim;
  std::function<Outcome(SearchCache&)> run;
};

std::string canonical_of(ConstructionKind kind, int n) {
  return canonical_form(build({kind, n, 0}).graph);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

Outcome p3_extremal_table(SearchCache& cache) {
  const std::map<int, std::uint64_t> expected{{4, 4}, {5, 6}, {6, 10}, {7, 15}, {8, 21}};
  Outcome o{true, "", ""};
  std::vector<std::string> obs, exp;
  for (const auto& [n, value] : expected) {
    const SearchReport& r = cache.get(n, 3);
    obs.push_back("n=" + std::to_string(n) + ":" + std::to_string(r.max_copies));
    exp.push_back("n=" + std::to_string(n) + ":" + std::to_string(value));
    o.passed = o.passed && r.max_copies == value;
  }
  // Named extremal graphs must be witnesses; n=7 must have no other.
  const std::vector<std::tuple<int, std::string, bool>> named{
      {4, canonical_of(ConstructionKind::cycle, 4), false},
      {5, canonical_of(ConstructionKind::cycle_pendant, 5), false},
      {7, canonical_of(ConstructionKind::star, 7), true}};
  for (const auto& [n, form, unique] : named) {
    const SearchReport& r = cache.get(n, 3);
    obs.push_back("witnesses(n=" + std::to_string(n) + ")=" + join(r.witnesses, ","));
    exp.push_back("witnesses(n=" + std::to_string(n) + ")" + (unique ? "=" : ">=") + form);
    const bool found = std::binary_search(r.witnesses.begin(), r.witnesses.end(), form);
    o.passed = o.passed && found && (!unique || r.witnesses.size() == 1);
  }
  o.observed = join(obs);
  o.expected = join(exp);
  return o;
}

Outcome p3_witnesses_n6(SearchCache& cache) {
  const SearchReport& r = cache.get(6, 3);
  const std::string star = canonical_of(ConstructionKind::star, 6);
  const std::string chorded = canonical_of(ConstructionKind::c6_chord, 6);
  const auto has = [&](const std::string& f) {
    return std::binary_search(r.witnesses.begin(), r.witnesses.end(), f);
  };
  return {r.max_copies == 10 && has(star) && has(chorded),
          "max=" + std::to_string(r.max_copies) + " witnesses=" + join(r.witnesses, ","),
          "max=10 witnesses include " + star + "," + chorded};
}

Outcome fibonacci_recurrence(SearchCache&) {
  Outcome o{true, "", ""};
  std::vector<std::string> obs, exp;
  for (int t = 2; t <= 12; ++t) {
    const std::uint64_t h = h_count(t);
    obs.push_back(std::to_string(h));
    exp.push_back(std::to_string(fib(t)));
    o.passed = o.passed && h == fib(t);
  }
  o.observed = "h(2..12)=" + join(obs, ",");
  o.expected = "fib(2..12)=" + join(exp, ",");
  return o;
}

Outcome endpoint_bound(SearchCache& cache) {
  int violations = 0;
  std::uint64_t scanned = 0;
  std::vector<std::string> worst;
  for (int n = 3; n <= kSearchMaxVertices; ++n) {
    const EndpointScan scan = scan_endpoint_counts(n, n, cache.jobs());
    scanned += scan.graphs_scanned;
    for (int len = 2; len <= n; ++len) {
      if (scan.max_pair_count[static_cast<std::size_t>(len)] > fib(len)) ++violations;
    }
    if (n == kSearchMaxVertices) {
      for (int len = 2; len <= n; ++len) {
        worst.push_back(std::to_string(scan.max_pair_count[static_cast<std::size_t>(len)]));
      }
    }
  }
  return {violations == 0,
          "violations=" + std::to_string(violations) + " graphs=" + std::to_string(scanned) +
              " max_pair_count(n=8,len=2..8)=" + join(worst, ","),
          "violations=0 max_pair_count(len) <= fib(len)"};
}

Outcome sandwich(SearchCache& cache) {
  int violations = 0;
  int lower_checked = 0;
  int upper_checked = 0;
  std::vector<std::string> bad;
  for (int n = 3; n <= kSearchMaxVertices; ++n) {
    for (int k = 1; k <= 5 && k + 1 <= n; ++k) {
      const std::uint64_t ex = cache.get(n, k + 1).max_copies;
      ++upper_checked;
      if (ex > fib(k + 1) * binomial(n, 2)) {
        ++violations;
        bad.push_back("upper(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
      }
      if (k >= 2 && n >= 2 * k) {
        ++lower_checked;
        if (!leq(lower_bound_value(k, n), ex)) {
          ++violations;
          bad.push_back("lower(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
        }
      }
    }
  }
  return {violations == 0,
          "violations=" + std::to_string(violations) + " upper_checked=" + std::to_string(upper_checked) +
              " lower_checked=" + std::to_string(lower_checked) + (bad.empty() ? "" : " " + join(bad, ",")),
          "violations=0"};
}

Outcome construction_strength(SearchCache&) {
  int violations = 0;
  std::vector<std::string> obs;
  for (int k = 3; k <= 6; ++k) {
    for (int n : {20, 30, 40}) {
      const Construction c = build({ConstructionKind::g_t_prime, n, k - 1});
      const std::uint64_t copies = count_induced_paths(c.graph, k + 1).copies;
      const Rational bound = lower_bound_value(k, n);
      if (!leq(bound, copies)) ++violations;
      obs.push_back("k=" + std::to_string(k) + ",n=" + std::to_string(n) + ":" + std::to_string(copies) +
                    ">=" + bound.to_string());
    }
  }
  return {violations == 0, join(obs), "violations=0"};
}

Tree random_tree(int n, int k, int shape, std::mt19937_64& rng) {
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<int> open{0};  // nodes with spare degree
  std::vector<std::size_t> slot(static_cast<std::size_t>(n), 0);
  auto pick_open = [&] { return open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)]; };
  for (int v = 1; v < n; ++v) {
    int p = 0;
    if (shape == 0) {
      p = pick_open();
    } else if (shape == 1) {
      p = degree[static_cast<std::size_t>(v - 1)] < k && std::bernoulli_distribution(0.8)(rng) ? v - 1 : pick_open();
    } else {
      p = (v - 1) / (k - 1);  // complete tree: every internal node has degree k
    }
    parent[static_cast<std::size_t>(v)] = p;
    ++degree[static_cast<std::size_t>(v)];
    slot[static_cast<std::size_t>(v)] = open.size();
    open.push_back(v);
    if (++degree[static_cast<std::size_t>(p)] == k) {
      const std::size_t i = slot[static_cast<std::size_t>(p)];
      open[i] = open.back();
      slot[static_cast<std::size_t>(open[i])] = i;
      open.pop_back();
    }
  }
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  Tree t{n, {}};
  for (int v = 1; v < n; ++v) {
    t.edges.push_back({label[static_cast<std::size_t>(v)], label[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])]});
  }
  std::shuffle(t.edges.begin(), t.edges.end(), rng);
  return t;
}

Outcome tree_cut(SearchCache&) {
  std::mt19937_64 rng(0x5eed7eeULL);
  int failures = 0;
  int trees = 0;
  int largest = 0;
  for (int k = 3; k <= 8; ++k) {
    for (int i = 0; i < 500; ++i) {
      const int n = std::uniform_int_distribution<int>(2, 2000)(rng);
      const Tree t = random_tree(n, k, i % 3, rng);
      largest = std::max(largest, n);
      ++trees;
      try {
        const EdgeCut cut = balanced_edge_cut(t, k);
        const auto [a, b] = component_sizes(t, cut.edge);
        if (static_cast<long long>(k) * std::min(a, b) < n - 1) ++failures;
      } catch (const InvariantViolation&) {
        ++failures;
      }
    }
  }
  return {failures == 0,
          "trees=" + std::to_string(trees) + " max_n=" + std::to_string(largest) + " failures=" +
              std::to_string(failures),
          "failures=0 (both sides >= (n-1)/k)"};
}

// Checks gating the chord-inequality criterion; the remaining audit entries
// are structural diagnostics reported alongside.
bool is_gating(std::string_view name) {
  const auto dot = name.find('.');
  const std::string_view base = dot == std::string_view::npos ? name : name.substr(dot + 1);
  return base == "sides_total" || base == "partition" || base == "budget" || base == "x_degree" ||
         base == "y_degree" || base == "x_p3" || base == "y_p3" || base == "crossing_by_type" ||
         base == "crossing_quadratic";
}

Outcome chord_inequalities(SearchCache&) {
  std::map<std::string, int> violations;
  long long chords = 0;
  int graphs = 0;
  for (int n = 3; n <= kSearchMaxVertices; ++n) {
    const OuterEmbedding emb = identity_embedding(n);
    for (const Graph& g : two_connected_outerplanar(n)) {
      ++graphs;
      for (const Edge& e : g.edges()) {
        for (const Edge chord : {e, Edge{e.v, e.u}}) {
          ++chords;
          for (const ChordCheck& c : audit_chord(g, emb, chord)) {
            if (!c.holds) ++violations[c.name];
          }
        }
      }
    }
  }
  int gating = 0;
  std::vector<std::string> failing, diagnostics;
  for (const auto& [name, count] : violations) {
    (is_gating(name) ? failing : diagnostics).push_back(name + "=" + std::to_string(count));
    if (is_gating(name)) gating += count;
  }
  std::string observed = "graphs=" + std::to_string(graphs) + " oriented_edges=" + std::to_string(chords) +
                         " violations=" + std::to_string(gating);
  if (!failing.empty()) observed += " [" + join(failing, ",") + "]";
  if (!diagnostics.empty()) observed += " diagnostics=[" + join(diagnostics, ",") + "]";
  return {gating == 0, observed, "violations=0"};
}

Outcome p3_closed_form(SearchCache&) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 16)(rng);
    const double p = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    const Graph g = random_outerplanar(n, rng, p);
    if (count_induced_paths(g, 3).copies != count_induced_p3_closed_form(g)) ++mismatches;
  }
  return {mismatches == 0, "graphs=1000 mismatches=" + std::to_string(mismatches), "mismatches=0"};
}

Outcome p4_double_star(SearchCache& cache) {
  int violations = 0;
  std::vector<std::string> obs, exp;
  for (int n = 4; n <= kSearchMaxVertices; ++n) {
    const std::uint64_t ex = cache.get(n, 4).max_copies;
    const std::uint64_t lower = static_cast<std::uint64_t>((n - 2) / 2) * static_cast<std::uint64_t>((n - 1) / 2);
    if (ex < lower) ++violations;
    obs.push_back("n=" + std::to_string(n) + ":" + std::to_string(ex));
    exp.push_back("n=" + std::to_string(n) + ":>=" + std::to_string(lower));
  }
  return {violations == 0, join(obs), join(exp)};
}

Outcome infrastructure(SearchCache& cache) {
  std::vector<std::string> problems;
  std::uint64_t roundtrips = 0;
  for (int n = 3; n <= kSearchMaxVertices; ++n) {
    enumerate_outerplanar(n, false, [&](const Graph& g) {
      ++roundtrips;
      if (from_graph6(to_graph6(g)) != g) problems.push_back("graph6");
    });
  }
  for (int n = 3; n <= 12; ++n) {
    if (count_triangulations(n) != catalan(n - 2)) problems.push_back("catalan(n=" + std::to_string(n) + ")");
  }
  const std::vector<std::pair<int, int>> instances{{7, 3}, {8, 4}};
  for (const auto& [n, k] : instances) {
    std::string reference;
    for (int jobs : {1, 2, 8}) {
      const std::string text = to_json({extremal_value(n, k, {jobs, true})}, false);
      if (reference.empty()) reference = text;
      if (text != reference) problems.push_back("jobs(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
    }
  }
  (void)cache;
  problems.erase(std::unique(problems.begin(), problems.end()), problems.end());
  return {problems.empty(),
          "graph6_roundtrips=" + std::to_string(roundtrips) + " catalan=3..12 jobs=1,2,8" +
              (problems.empty() ? "" : " problems=" + join(problems, ",")),
          "all identical"};
}

const std::vector<CheckDef>& checks() {
  static const std::vector<CheckDef> defs{
      {"p3_extremal_table", "max induced P3 over outerplanar graphs is 4,6,10,15,21 for n=4..8; C4 and C4 plus a leaf are extremal at n=4,5; the star is the only extremal graph at n=7", p3_extremal_table},
      {"p3_witnesses_n6", "n=6 extremal graphs for P3 include the star and C6 with a long chord", p3_witnesses_n6},
      {"fibonacci_recurrence", "h(t) = fib(t) for 2 <= t <= 12", fibonacci_recurrence},
      {"endpoint_bound", "at most fib(len) induced paths on len vertices join any vertex pair, n <= 8", endpoint_bound},
      {"sandwich", "fib(k-1)(n-2k+3)^2/4 <= ex(n, P_{k+1}) <= fib(k+1) C(n,2) for n <= 8, k <= 5", sandwich},
      {"construction_strength", "G'_{k-1}(n) has at least fib(k-1)(n-2k+3)^2/4 induced P_{k+1}", construction_strength},
      {"tree_cut", "every tree with max degree <= k has an edge leaving >= (n-1)/k nodes on both sides", tree_cut},
      {"chord_inequalities", "crossing-path counting inequalities hold on every chord of every 2-connected outerplanar graph, n <= 8", chord_inequalities},
      {"p3_closed_form", "closed-form induced P3 count equals enumeration", p3_closed_form},
      {"p4_double_star", "ex(n, P4) >= floor((n-2)/2) ceil((n-2)/2) for n <= 8", p4_double_star},
      {"infrastructure", "graph6 round trips, Catalan triangulation counts, worker-count independence", infrastructure},
  };
  return defs;
}

}  // namespace

int VerifyReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

int VerifyReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::vector<std::string> verify_check_names() {
  std::vector<std::string> names;
  for (const CheckDef& d : checks()) names.emplace_back(d.name);
  return names;
}

std::string resolve_check_name(std::string_view name) {
  static const std::map<std::string_view, std::string_view> aliases{
      {"lemma22", "tree_cut"}, {"tree-cut", "tree_cut"}};
  if (const auto it = aliases.find(name); it != aliases.end()) return std::string(it->second);
  for (const CheckDef& d : checks()) {
    if (d.name == name) return std::string(name);
  }
  throw InvalidArgument("unknown check '" + std::string(name) + "'");
}

VerifyReport run_verify(const VerifyOptions& options) {
  std::vector<std::string> wanted;
  for (const std::string& name : options.only) wanted.push_back(resolve_check_name(name));
  SearchCache cache(options.jobs);
  VerifyReport report;
  for (const CheckDef& d : checks()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), d.name) == wanted.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = d.run(cache);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back({std::string(d.name), std::string(d.claim), o.passed, o.observed, o.expected, elapsed});
  }
  return report;
}

std::string to_json(const VerifyReport& report, bool timing) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json j{{"name", c.name},
           {"claim", c.claim},
           {"status", c.passed ? "pass" : "fail"},
           {"observed", c.observed},
           {"expected", c.expected}};
    if (timing) j["elapsed_seconds"] = c.elapsed_seconds;
    checks.push_back(std::move(j));
  }
  return dump({{"schema", kSchema},
               {"command", "verify-paper"},
               {"checks", std::move(checks)},
               {"summary",
                {{"total", report.checks.size()}, {"passed", report.passed()}, {"failed", report.failed()}}}});
}

std::string to_json(const std::vector<SearchReport>& reports, bool timing, bool witnesses) {
  Json results = Json::array();
  for (const SearchReport& r : reports) {
    Json j{{"n", r.n},
           {"k", r.k},
           {"max_copies", r.max_copies},
           {"witness_count", r.witnesses.size()},
           {"graphs_scanned", r.graphs_scanned},
           {"triangulations", r.triangulations}};
    if (witnesses) j["witnesses"] = r.witnesses;
    if (timing) j["elapsed_seconds"] = r.elapsed_seconds;
    results.push_back(std::move(j));
  }
  return dump({{"schema", kSchema}, {"command", "search"}, {"results", std::move(results)}});
}

std::string to_json(const PathCount& count, int n) {
  return dump({{"schema", kSchema}, {"command", "count"}, {"n", n}, {"k", count.k}, {"copies", count.copies}});
}

std::string to_json(const Construction& c, const ConstructionSpec& spec) {
  Json edges = Json::array();
  for (const Edge& e : c.graph.edges()) edges.push_back({e.u, e.v});
  return dump({{"schema", kSchema},
               {"command", "construct"},
               {"kind", to_string(spec.kind)},
               {"t", spec.t},
               {"n", c.graph.vertex_count()},
               {"edge_count", c.graph.edge_count()},
               {"graph6", to_graph6(c.graph)},
               {"order", c.embedding.order},
               {"edges", std::move(edges)}});
}

std::string to_json(const DualTree& dual) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < dual.edges.size(); ++i) {
    edges.push_back({{"faces", {dual.edges[i].u, dual.edges[i].v}},
                     {"chord", {dual.shared_edge[i].u, dual.shared_edge[i].v}}});
  }
  return dump({{"schema", kSchema},
               {"command", "dual"},
               {"faces", dual.faces},
               {"max_degree", dual.as_tree().max_degree()},
               {"edges", std::move(edges)}});
}

std::string search_csv_header() { return "n,k,max_copies,witness_count,graphs_scanned,triangulations\n"; }

std::string to_csv_row(const SearchReport& r) {
  std::ostringstream os;
  os << r.n << ',' << r.k << ',' << r.max_copies << ',' << r.witnesses.size() << ',' << r.graphs_scanned << ','
     << r.triangulations << '\n';
  return os.str();
}

}  // namespace outerpath
