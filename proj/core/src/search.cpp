#include "outerpath/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <thread>
#include <unordered_set>

#include "outerpath/constructions.hpp"
#include "outerpath/errors.hpp"
#include "outerpath/path_counting.hpp"

namespace outerpath {

namespace {

void require_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw UnsupportedSize(std::string(what) + " supports " + std::to_string(lo) + " <= n <= " +
                          std::to_string(hi) + ", got n=" + std::to_string(n));
  }
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

// Pending sub-polygons are position intervals [lo, hi] whose base edge lo-hi
// already exists; each gets an apex, which closes a triangle.
void triangulate(std::vector<std::pair<int, int>>& pending, Graph& g,
                 const std::function<void(const Graph&)>& visit) {
  if (pending.empty()) {
    visit(g);
    return;
  }
  const auto [lo, hi] = pending.back();
  pending.pop_back();
  if (hi - lo < 2) {
    triangulate(pending, g, visit);
  } else {
    for (int apex = lo + 1; apex < hi; ++apex) {
      if (apex - lo >= 2) g.add_edge(lo, apex);
      if (hi - apex >= 2) g.add_edge(apex, hi);
      pending.emplace_back(apex, hi);
      pending.emplace_back(lo, apex);
      triangulate(pending, g, visit);
      pending.pop_back();
      pending.pop_back();
      if (apex - lo >= 2) g.remove_edge(lo, apex);
      if (hi - apex >= 2) g.remove_edge(apex, hi);
    }
  }
  pending.emplace_back(lo, hi);
}

// Labeled graphs on at most 8 vertices packed one adjacency byte per vertex.
std::uint64_t pack(const Graph& g) {
  std::uint64_t key = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) key |= g.row(v) << (8 * v);
  return key;
}

Graph unpack(int n, std::uint64_t key) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    const Mask r = (key >> (8 * u)) & 0xFF;
    for (Mask m = r & ~low_bits(u + 1); m != 0; m &= m - 1) g.add_edge(u, std::countr_zero(m));
  }
  return g;
}

// Visits every edge subset of t, changing one edge per step (Gray code order).
template <class Visitor>
void for_each_subgraph(const Graph& t, Visitor&& visit) {
  const std::vector<Edge> edges = t.edges();
  Graph g(t.vertex_count());
  visit(static_cast<const Graph&>(g));
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    const Edge& e = edges[static_cast<std::size_t>(std::countr_zero(i))];
    g.toggle_edge(e.u, e.v);
    visit(static_cast<const Graph&>(g));
  }
}

// Strided partition of the triangulation list; worker w owns indices w, w+jobs, ...
template <class Acc, class Work>
std::vector<Acc> run_workers(const std::vector<Graph>& tris, int jobs, Work work) {
  jobs = std::max(1, std::min<int>(jobs <= 0 ? default_jobs() : jobs, static_cast<int>(tris.size())));
  std::vector<Acc> accs(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    for (const Graph& t : tris) work(accs[0], t);
    return accs;
  }
  std::vector<std::jthread> threads;
  threads.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < tris.size(); i += static_cast<std::size_t>(jobs)) {
        work(accs[static_cast<std::size_t>(w)], tris[i]);
      }
    });
  }
  threads.clear();
  return accs;
}

}  // namespace

std::uint64_t catalan(int m) {
  if (m < 0 || m > 35) throw InvalidArgument("catalan: m out of range");
  std::uint64_t c = 1;
  for (int i = 0; i < m; ++i) c = c * static_cast<std::uint64_t>(2 * (2 * i + 1)) / static_cast<std::uint64_t>(i + 2);
  return c;
}

void enumerate_triangulations(int n, const std::function<void(const Graph&)>& visit) {
  require_range(n, 3, kTriangulationMaxVertices, "enumerate_triangulations");
  Graph g = cycle_graph(n);
  std::vector<std::pair<int, int>> pending{{0, n - 1}};
  triangulate(pending, g, visit);
}

std::vector<Graph> triangulations(int n) {
  std::vector<Graph> out;
  enumerate_triangulations(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_triangulations(int n) {
  std::uint64_t count = 0;
  enumerate_triangulations(n, [&](const Graph&) { ++count; });
  return count;
}

void enumerate_outerplanar(int n, bool dedup, const std::function<void(const Graph&)>& visit) {
  if (!dedup) {
    require_range(n, 3, kTriangulationMaxVertices, "enumerate_outerplanar");
    enumerate_triangulations(n, [&](const Graph& t) { for_each_subgraph(t, visit); });
    return;
  }
  require_range(n, 3, kSearchMaxVertices, "enumerate_outerplanar with dedup");
  std::unordered_set<std::uint64_t> labeled;
  enumerate_triangulations(n, [&](const Graph& t) {
    for_each_subgraph(t, [&](const Graph& g) { labeled.insert(pack(g)); });
  });
  std::set<std::string> classes;
  for (std::uint64_t key : labeled) classes.insert(canonical_form(unpack(n, key)));
  for (const std::string& form : classes) visit(from_graph6(form));
}

Graph random_triangulation(int n, std::mt19937_64& rng) {
  require_range(n, 3, kMaxVertices, "random_triangulation");
  Graph g = cycle_graph(n);
  std::vector<std::pair<int, int>> pending{{0, n - 1}};
  while (!pending.empty()) {
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    if (hi - lo < 2) continue;
    const int apex = std::uniform_int_distribution<int>(lo + 1, hi - 1)(rng);
    if (apex - lo >= 2) g.add_edge(lo, apex);
    if (hi - apex >= 2) g.add_edge(apex, hi);
    pending.emplace_back(lo, apex);
    pending.emplace_back(apex, hi);
  }
  return g;
}

Graph random_outerplanar(int n, std::mt19937_64& rng, double edge_probability) {
  const Graph t = random_triangulation(n, rng);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution keep(edge_probability);
  Graph g(n);
  for (const Edge& e : t.edges()) {
    if (keep(rng)) g.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return g;
}

int default_jobs() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

SearchReport extremal_value(int n, int k, const SearchOptions& options) {
  require_range(n, 3, kSearchMaxVertices, "extremal_value");
  if (k < 1 || k > n) throw InvalidArgument("extremal_value: k must be in 1..n");
  const auto start = std::chrono::steady_clock::now();

  struct Acc {
    std::uint64_t best = 0;
    std::unordered_set<std::uint64_t> at_best;
    std::uint64_t scanned = 0;
  };
  const std::vector<Graph> tris = triangulations(n);
  const bool keep = options.witnesses;
  auto accs = run_workers<Acc>(tris, options.jobs, [&](Acc& acc, const Graph& t) {
    for_each_subgraph(t, [&](const Graph& g) {
      ++acc.scanned;
      const std::uint64_t c = count_induced_paths(g, k).copies;
      if (c < acc.best) return;
      if (c > acc.best) {
        acc.best = c;
        acc.at_best.clear();
      }
      if (keep) acc.at_best.insert(pack(g));
    });
  });

  SearchReport report;
  report.n = n;
  report.k = k;
  report.triangulations = tris.size();
  for (const Acc& acc : accs) {
    report.max_copies = std::max(report.max_copies, acc.best);
    report.graphs_scanned += acc.scanned;
  }
  if (keep) {
    std::set<std::string> forms;
    std::unordered_set<std::uint64_t> seen;
    for (const Acc& acc : accs) {
      if (acc.best != report.max_copies) continue;
      for (std::uint64_t key : acc.at_best) {
        if (seen.insert(key).second) forms.insert(canonical_form(unpack(n, key)));
      }
    }
    report.witnesses.assign(forms.begin(), forms.end());
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

EndpointScan scan_endpoint_counts(int n, int max_len, int jobs) {
  require_range(n, 3, kSearchMaxVertices, "scan_endpoint_counts");
  if (max_len < 2 || max_len > n) throw InvalidArgument("scan_endpoint_counts: max_len must be in 2..n");
  struct Acc {
    std::vector<std::uint64_t> best;
    std::uint64_t scanned = 0;
  };
  const std::vector<Graph> tris = triangulations(n);
  auto accs = run_workers<Acc>(tris, jobs, [&](Acc& acc, const Graph& t) {
    acc.best.resize(static_cast<std::size_t>(max_len + 1), 0);
    for_each_subgraph(t, [&](const Graph& g) {
      ++acc.scanned;
      const EndpointCensus census(g, max_len);
      for (int len = 2; len <= max_len; ++len) {
        acc.best[static_cast<std::size_t>(len)] =
            std::max(acc.best[static_cast<std::size_t>(len)], census.max_for_length(len));
      }
    });
  });
  EndpointScan scan;
  scan.n = n;
  scan.max_len = max_len;
  scan.max_pair_count.assign(static_cast<std::size_t>(max_len + 1), 0);
  for (const Acc& acc : accs) {
    scan.graphs_scanned += acc.scanned;
    for (std::size_t len = 0; len < acc.best.size(); ++len) {
      scan.max_pair_count[len] = std::max(scan.max_pair_count[len], acc.best[len]);
    }
  }
  return scan;
}

bool verify_fib_bounds(int n, int k, int jobs) {
  require_range(n, 3, kSearchMaxVertices, "verify_fib_bounds");
  if (k < 1 || k + 1 > n) throw InvalidArgument("verify_fib_bounds: need 1 <= k and k+1 <= n");
  const std::uint64_t cap = fib(k + 1);
  const EndpointScan scan = scan_endpoint_counts(n, k + 1, jobs);
  if (scan.max_pair_count[static_cast<std::size_t>(k + 1)] > cap) return false;
  const SearchReport report = extremal_value(n, k + 1, {jobs, false});
  return report.max_copies <= cap * binomial(n, 2);
}

std::vector<Graph> two_connected_outerplanar(int n) {
  require_range(n, 3, 12, "two_connected_outerplanar");
  std::set<std::string> seen;
  std::vector<Graph> out;
  const Graph ring = cycle_graph(n);
  enumerate_triangulations(n, [&](const Graph& t) {
    std::vector<Edge> chords;
    for (const Edge& e : t.edges()) {
      if (!ring.has_edge(e.u, e.v)) chords.push_back(e);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << chords.size()); ++mask) {
      Graph g = ring;
      for (std::size_t i = 0; i < chords.size(); ++i) {
        if ((mask >> i) & 1U) g.add_edge(chords[i].u, chords[i].v);
      }
      if (seen.insert(to_graph6(g)).second) out.push_back(g);
    }
  });
  return out;
}

}  // namespace outerpath
