#include <doctest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "oracles.hpp"
#include "outerpath/errors.hpp"
#include "outerpath/outerplanarity.hpp"
#include "outerpath/search.hpp"

using namespace outerpath;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph k23() {
  return Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

// Replaces edge u-v by a path through a new vertex.
Graph subdivide(const Graph& g, Vertex u, Vertex v) {
  Graph h(g.vertex_count() + 1);
  for (const Edge& e : g.edges()) {
    if (!(e == Edge{std::min(u, v), std::max(u, v)})) h.add_edge(e.u, e.v);
  }
  h.add_edge(u, g.vertex_count());
  h.add_edge(g.vertex_count(), v);
  return h;
}

// Hexagon 0..5 fanned from vertex 0.
Graph fan_hexagon() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {0, 3}, {0, 4}});
}

}  // namespace

TEST_CASE("forbidden subdivisions") {
  CHECK(has_k4_subdivision(complete(4)));
  CHECK_FALSE(is_outerplanar(complete(4)));
  CHECK(has_k23_subdivision(k23()));
  CHECK_FALSE(has_k4_subdivision(k23()));
  CHECK_FALSE(is_outerplanar(k23()));
  CHECK_FALSE(is_outerplanar(subdivide(subdivide(complete(4), 0, 1), 2, 3)));
  CHECK_FALSE(is_outerplanar(subdivide(k23(), 0, 2)));
  CHECK(is_outerplanar(fan_hexagon()));
  CHECK(is_outerplanar(complete(3)));
  CHECK(is_outerplanar(Graph(1)));
  Graph k4e = complete(4);
  k4e.remove_edge(0, 1);
  CHECK(is_outerplanar(k4e));
}

TEST_CASE("size caps and the edge-count shortcut") {
  CHECK_FALSE(is_outerplanar(complete(20)));  // too many edges, answered without search
  Graph big(17);
  for (int v = 0; v + 1 < 17; ++v) big.add_edge(v, v + 1);
  CHECK_THROWS_AS(is_outerplanar(big), UnsupportedSize);
}

TEST_CASE("recognition agrees with crossing-free cyclic orders, exhaustive n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::set<std::string> seen;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) g.add_edge(pairs[i].u, pairs[i].v);
      if (!seen.insert(canonical_form(g)).second) continue;
      CHECK_MESSAGE(is_outerplanar(g) == oracle::outerplanar_by_orders(g), to_graph6(g));
    }
  }
}

TEST_CASE("recognition agrees with the downward closure of maximal graphs, exhaustive n = 7") {
  constexpr int n = 7;
  std::vector<Edge> pairs;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      index[u][v] = index[v][u] = static_cast<int>(pairs.size());
      pairs.push_back({u, v});
    }
  const std::uint32_t total = 1U << pairs.size();
  std::vector<char> outerplanar(total, 0);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto maximal = oracle::triangulations(n);
  CHECK(maximal.size() == 42);
  do {
    for (const Graph& t : maximal) {
      std::uint32_t mask = 0;
      for (const Edge& e : t.edges()) mask |= 1U << index[perm[e.u]][perm[e.v]];
      outerplanar[mask] = 1;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      if ((mask >> b) & 1U && outerplanar[mask]) outerplanar[mask & ~(1U << b)] = 1;
    }
  }
  long disagreements = 0;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) g.add_edge(pairs[i].u, pairs[i].v);
    disagreements += is_outerplanar(g) != static_cast<bool>(outerplanar[mask]);
  }
  CHECK(disagreements == 0);
}

TEST_CASE("verify_embedding") {
  const Graph g = fan_hexagon();
  CHECK(verify_embedding(g, identity_embedding(6)));
  CHECK(verify_embedding(g, parse_order("3,2,1,0,5,4")));
  CHECK_FALSE(verify_embedding(g, parse_order("0,2,1,3,4,5")));
  CHECK_THROWS_AS(verify_embedding(g, parse_order("0,1,2")), InvalidArgument);
  CHECK_THROWS_AS(parse_order("0,,1"), ParseError);
  CHECK_THROWS_AS(parse_order("a"), ParseError);
  CHECK(format_order(parse_order("2,0,1")) == "2,0,1");
}

TEST_CASE("outer cycle of the fan hexagon") {
  const Graph g = fan_hexagon();
  CHECK(outer_cycle(g) == identity_embedding(6));
  std::mt19937_64 rng(19);
  const auto p = oracle::random_permutation(6, rng);
  const Graph h = g.relabeled(p);
  const OuterEmbedding emb = outer_cycle(h);
  CHECK(verify_embedding(h, emb));
  CHECK(emb.order.front() == 0);
  CHECK_THROWS_AS(outer_cycle(Graph::from_edges(3, {{0, 1}, {1, 2}})), PreconditionError);
  CHECK_THROWS_AS(outer_cycle(complete(4)), PreconditionError);
}

TEST_CASE("2-connected outerplanar graphs have exactly one Hamiltonian cycle, n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : two_connected_outerplanar(n)) {
      // Count Hamiltonian cycles through vertex 0 by brute force, each cycle counted twice.
      std::vector<Vertex> rest(static_cast<std::size_t>(n - 1));
      std::iota(rest.begin(), rest.end(), 1);
      int cycles = 0;
      do {
        bool ok = g.has_edge(0, rest.front()) && g.has_edge(rest.back(), 0);
        for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(rest[i], rest[i + 1]);
        cycles += ok;
      } while (std::next_permutation(rest.begin(), rest.end()));
      CHECK(cycles == 2);
      CHECK(outer_cycle(g) == identity_embedding(n));
    }
  }
}

TEST_CASE("side walks") {
  const auto [ccw, cw] = side_walks(identity_embedding(6), 1, 4);
  CHECK(ccw == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(cw == std::vector<Vertex>{1, 0, 5, 4});
}

TEST_CASE("interior faces") {
  const auto faces = interior_faces(fan_hexagon(), identity_embedding(6));
  CHECK(faces == std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}});
  Graph c6_chord = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  CHECK(interior_faces(c6_chord, identity_embedding(6)) ==
        std::vector<std::vector<Vertex>>{{0, 1, 2, 3}, {0, 3, 4, 5}});
}

TEST_CASE("maximal completion is maximal, contains the input and is idempotent") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 16)(rng);
    const Graph t = random_triangulation(n, rng);
    Graph g(n);
    std::bernoulli_distribution keep(0.5);
    for (const Edge& e : t.edges())
      if (keep(rng)) g.add_edge(e.u, e.v);
    const OuterEmbedding emb = identity_embedding(n);
    const Graph m = maximal_completion(g, emb);
    CHECK(m.edge_count() == 2 * n - 3);
    CHECK(verify_embedding(m, emb));
    for (const Edge& e : g.edges()) CHECK(m.has_edge(e.u, e.v));
    CHECK(maximal_completion(m, emb) == m);
    CHECK(is_outerplanar(m));
  }
}
