// Acceptance gate: one line per criterion, "AC<n> PASS|FAIL <title>: <detail>".
// Usage: outerpath_acceptance [criterion numbers...]  (default: all)
// Exit status 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "outerpath/constructions.hpp"
#include "outerpath/dual.hpp"
#include "outerpath/errors.hpp"
#include "outerpath/path_counting.hpp"
#include "outerpath/report.hpp"
#include "outerpath/search.hpp"

using namespace outerpath;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed1(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << s << "s";
  return os.str();
}

std::string canon(ConstructionKind kind, int n) { return canonical_form(build({kind, n, 0}).graph); }

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

// 1. ex(n, P3) = 4, 6, 10, 15, 21 for n = 4..8 in under two minutes; C4 at n=4,
//    C4 plus a leaf at n=5, the star and nothing else at n=7, C(7,2) at n=8.
Verdict ac1() {
  const auto t0 = Clock::now();
  const std::map<int, std::uint64_t> want{{4, 4}, {5, 6}, {6, 10}, {7, 15}, {8, binomial(7, 2)}};
  std::map<int, SearchReport> got;
  for (const auto& [n, v] : want) got[n] = extremal_value(n, 3);
  const double elapsed = seconds_since(t0);
  bool ok = elapsed < 120.0;
  std::ostringstream d;
  for (const auto& [n, v] : want) {
    ok = ok && got[n].max_copies == v;
    d << "n=" << n << ":" << got[n].max_copies << " ";
  }
  ok = ok && got[4].witnesses == std::vector<std::string>{canon(ConstructionKind::cycle, 4)};
  ok = ok && contains(got[5].witnesses, canon(ConstructionKind::cycle_pendant, 5));
  ok = ok && got[7].witnesses == std::vector<std::string>{canon(ConstructionKind::star, 7)};
  d << "witnesses n=4:" << got[4].witnesses.size() << " n=5:" << got[5].witnesses.size()
    << " n=7:" << got[7].witnesses.size() << " (" << fixed1(elapsed) << ", limit 120s)";
  return {ok, d.str()};
}

// 2. n = 6 witnesses include the star and C6 with an antipodal chord.
Verdict ac2() {
  const SearchReport r = extremal_value(6, 3);
  const bool ok = r.max_copies == 10 && contains(r.witnesses, canon(ConstructionKind::star, 6)) &&
                  contains(r.witnesses, canon(ConstructionKind::c6_chord, 6));
  std::string all;
  for (const auto& w : r.witnesses) all += (all.empty() ? "" : ",") + w;
  return {ok, "classes=" + std::to_string(r.witnesses.size()) + " [" + all + "]"};
}

// 3. h(t) = fib(t) for 2 <= t <= 12 in under ten seconds.
Verdict ac3() {
  const auto t0 = Clock::now();
  int bad = 0;
  for (int t = 2; t <= 12; ++t) bad += h_count(t) != fib(t);
  const double elapsed = seconds_since(t0);
  return {bad == 0 && elapsed < 10.0,
          "mismatches=" + std::to_string(bad) + " (" + fixed1(elapsed) + ", limit 10s)"};
}

// 4. Every vertex pair of every outerplanar graph on n <= 8 vertices is joined
//    by at most fib(len) induced paths on len <= 8 vertices.
Verdict ac4() {
  long violations = 0;
  std::uint64_t graphs = 0;
  for (int n = 3; n <= 8; ++n) {
    enumerate_outerplanar(n, false, [&](const Graph& g) {
      ++graphs;
      const EndpointCensus census(g, n);
      for (int len = 2; len <= n; ++len) violations += census.max_for_length(len) > fib(len);
    });
  }
  return {violations == 0, "graphs=" + std::to_string(graphs) + " violations=" + std::to_string(violations)};
}

// 5. fib(k-1)(n-2k+3)^2/4 <= ex(n, P_{k+1}) <= fib(k+1) C(n,2), n <= 8, k <= 5.
Verdict ac5() {
  int violations = 0, checks = 0;
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; k <= 5 && k + 1 <= n; ++k) {
      const std::uint64_t ex = extremal_value(n, k + 1, {0, false}).max_copies;
      ++checks;
      violations += ex > fib(k + 1) * binomial(n, 2);
      if (k >= 2 && n >= 2 * k) {
        ++checks;
        violations += !leq(lower_bound_value(k, n), ex);
      }
    }
  }
  return {violations == 0, "inequalities=" + std::to_string(checks) + " violations=" + std::to_string(violations)};
}

// 6. G'_{k-1}(n) has at least fib(k-1)(n-2k+3)^2/4 induced P_{k+1}, each under a minute.
Verdict ac6() {
  int violations = 0;
  double slowest = 0;
  for (int k = 3; k <= 6; ++k) {
    for (int n : {20, 30, 40}) {
      const auto t0 = Clock::now();
      const std::uint64_t c = count_induced_paths(build({ConstructionKind::g_t_prime, n, k - 1}).graph, k + 1).copies;
      const double s = seconds_since(t0);
      slowest = std::max(slowest, s);
      violations += !leq(lower_bound_value(k, n), c) || s >= 60.0;
    }
  }
  return {violations == 0,
          "instances=12 violations=" + std::to_string(violations) + " (slowest " + fixed1(slowest) + ", limit 60s)"};
}

Tree random_capped_tree(int n, int k, std::mt19937_64& rng) {
  // Mix of uniform attachment and long chains; degree never exceeds k.
  Tree t{n, {}};
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<int> open{0};
  const double chain = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  for (int v = 1; v < n; ++v) {
    int p = -1;
    if (std::bernoulli_distribution(chain)(rng) && deg[static_cast<std::size_t>(v - 1)] < k) p = v - 1;
    while (p < 0) {
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng);
      if (deg[static_cast<std::size_t>(open[i])] < k) {
        p = open[i];
      } else {
        open[i] = open.back();
        open.pop_back();
      }
    }
    ++deg[static_cast<std::size_t>(p)];
    ++deg[static_cast<std::size_t>(v)];
    open.push_back(v);
    t.edges.push_back({p, v});
  }
  return t;
}

// 7. 500 random trees per k in 3..8, n up to 2000, max degree <= k: both sides
//    of the returned edge have at least (n-1)/k nodes.
Verdict ac7() {
  std::mt19937_64 rng(20260101);
  int failures = 0, trees = 0;
  for (int k = 3; k <= 8; ++k) {
    for (int i = 0; i < 500; ++i, ++trees) {
      const int n = i < 5 ? 2000 : std::uniform_int_distribution<int>(2, 2000)(rng);
      const Tree t = random_capped_tree(n, k, rng);
      try {
        const EdgeCut cut = balanced_edge_cut(t, k);
        const auto [a, b] = component_sizes(t, cut.edge);
        // a >= (n-1)/k  <=>  k a >= n - 1
        failures += static_cast<long long>(k) * std::min(a, b) < n - 1;
      } catch (const std::exception&) {
        ++failures;
      }
    }
  }
  return {failures == 0, "trees=" + std::to_string(trees) + " failures=" + std::to_string(failures)};
}

// 8. On every chord of every 2-connected outerplanar graph with n <= 8: the
//    six-term crossing bound, the per-side inequalities, phi <= n1 n2 + n1 + n2,
//    and partition completeness.
Verdict ac8() {
  std::map<std::string, long> bad;
  long chords = 0;
  auto side_checks = [&](const SideStats& s, const std::string& side) {
    const long a = s.a.size(), b1 = s.b1.size(), b2 = s.b2.size(), d1 = s.d1.size(), d2 = s.d2.size();
    bad[side + " budget"] += a + b1 + b2 + d1 + d2 > s.size - 1;
    bad[side + " x-degree"] += 2L * s.x_neighbors > d1 + 1 + 2 * b1;
    bad[side + " y-degree"] += 2L * s.y_neighbors > d2 + 1 + 2 * b2;
    bad[side + " x-P3"] += s.x_p3 > d1 + a;
    bad[side + " y-P3"] += s.y_p3 > d2 + a;
    // Partition: interior vertices in exactly one class, except a vertex that is
    // both the last x-neighbour and the first y-neighbour, which is in D1 and D2.
    Vertex shared = -1;
    if (s.has_v_ell) {
      for (Vertex v : s.walk)
        if (s.x_side.contains(v)) shared = v;
    }
    long misplaced = 0;
    for (std::size_t i = 1; i + 1 < s.walk.size(); ++i) {
      const Vertex v = s.walk[i];
      const int hits = s.a.contains(v) + s.b1.contains(v) + s.b2.contains(v) + s.d1.contains(v) + s.d2.contains(v);
      misplaced += v == shared ? !(hits == 2 && s.d1.contains(v) && s.d2.contains(v)) : hits != 1;
    }
    bad[side + " partition"] += misplaced > 0;
  };
  for (int n = 4; n <= 8; ++n) {
    const OuterEmbedding emb = identity_embedding(n);
    for (const Graph& g : two_connected_outerplanar(n)) {
      for (const Edge& e : g.edges()) {
        if (e.v - e.u == 1 || e.v - e.u == n - 1) continue;  // cycle edge
        for (const Edge c : {e, Edge{e.v, e.u}}) {
          ++chords;
          const ChordStats st = chord_stats(g, emb, c);
          const std::uint64_t f = phi(g, emb, c, 4);
          const auto u = [](int v) { return static_cast<std::uint64_t>(v); };
          const std::uint64_t six = u(st.s1()) * u(st.q1()) + u(st.t1()) * u(st.p1()) + u(st.s1()) * u(st.t2()) +
                                    u(st.s2()) * u(st.t1()) + u(st.p1()) * u(st.q2()) + u(st.p2()) * u(st.q1());
          bad["six-term"] += f > six;
          bad["quadratic"] += f > u(st.n1()) * u(st.n2()) + u(st.n1()) + u(st.n2());
          side_checks(st.inner, "inner");
          side_checks(st.outer, "outer");
        }
      }
    }
  }
  long total = 0;
  std::string failing;
  for (const auto& [name, count] : bad) {
    total += count;
    if (count) failing += (failing.empty() ? "" : ", ") + name + "=" + std::to_string(count);
  }
  return {total == 0, "oriented chords=" + std::to_string(chords) + " violations=" + std::to_string(total) +
                          (failing.empty() ? "" : " [" + failing + "]")};
}

// 9. Closed-form P3 count equals enumeration on 1000 random outerplanar graphs, n <= 16.
Verdict ac9() {
  std::mt19937_64 rng(1009);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 16)(rng);
    const Graph g = random_outerplanar(n, rng, std::uniform_real_distribution<double>(0.3, 1.0)(rng));
    mismatches += count_induced_p3_closed_form(g) != count_induced_paths(g, 3).copies;
  }
  return {mismatches == 0, "graphs=1000 mismatches=" + std::to_string(mismatches)};
}

// 10. ex(n, P4) for n <= 8, each at least floor((n-2)/2) ceil((n-2)/2).
Verdict ac10() {
  int violations = 0;
  std::string values;
  for (int n = 4; n <= 8; ++n) {
    const std::uint64_t ex = extremal_value(n, 4, {0, false}).max_copies;
    const std::uint64_t lo = static_cast<std::uint64_t>((n - 2) / 2) * static_cast<std::uint64_t>((n - 1) / 2);
    violations += ex < lo;
    values += " n=" + std::to_string(n) + ":" + std::to_string(ex) + ">=" + std::to_string(lo);
  }
  return {violations == 0, "violations=" + std::to_string(violations) + values};
}

// 11. graph6 round trip on every generated graph, Catalan counts for n <= 12,
//     byte-identical search output for 1, 2 and 8 workers.
Verdict ac11() {
  std::uint64_t roundtrips = 0, broken = 0;
  for (int n = 3; n <= 8; ++n) {
    enumerate_outerplanar(n, false, [&](const Graph& g) {
      ++roundtrips;
      broken += from_graph6(to_graph6(g)) != g;
    });
  }
  for (int t = 2; t <= 20; ++t) {
    const Graph g = build({ConstructionKind::g_t_prime, 2 * t + 24, t}).graph;
    ++roundtrips;
    broken += from_graph6(to_graph6(g)) != g;
  }
  int catalan_bad = 0;
  for (int n = 3; n <= 12; ++n) catalan_bad += count_triangulations(n) != catalan(n - 2);
  int nondeterministic = 0;
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {8, 3}, {8, 5}}) {
    const std::string one = to_json({extremal_value(n, k, {1, true})}, false);
    for (int jobs : {2, 8}) nondeterministic += to_json({extremal_value(n, k, {jobs, true})}, false) != one;
  }
  return {broken == 0 && catalan_bad == 0 && nondeterministic == 0,
          "graph6 roundtrips=" + std::to_string(roundtrips) + " broken=" + std::to_string(broken) +
              " catalan mismatches=" + std::to_string(catalan_bad) +
              " worker-dependent outputs=" + std::to_string(nondeterministic)};
}

struct Criterion {
  int id;
  const char* title;
  Verdict (*run)();
};

const Criterion kCriteria[] = {
    {1, "P3 extremal table n=4..8", ac1},
    {2, "n=6 P3 witnesses", ac2},
    {3, "Fibonacci recurrence h(t)=fib(t)", ac3},
    {4, "endpoint bound fib(k+1)", ac4},
    {5, "desk-scale sandwich", ac5},
    {6, "construction strength", ac6},
    {7, "balanced tree edge cut", ac7},
    {8, "chord inequality suite", ac8},
    {9, "closed-form P3 oracle", ac9},
    {10, "P4 extremal values vs double star", ac10},
    {11, "infrastructure", ac11},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    const long id = std::strtol(argv[i], &end, 10);
    if (*end != '\0' || id < 1 || id > 11) {
      std::cerr << "usage: " << argv[0] << " [1-11 ...]\n";
      return 2;
    }
    selected.insert(static_cast<int>(id));
  }
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << "AC" << c.id << ' ' << (v.pass ? "PASS" : "FAIL") << ' ' << c.title << ": " << v.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
