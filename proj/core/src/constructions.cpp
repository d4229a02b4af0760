#include "outerpath/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "outerpath/errors.hpp"
#include "outerpath/path_counting.hpp"

namespace outerpath {

namespace {

constexpr std::array<std::pair<ConstructionKind, std::string_view>, 7> kKindNames{{
    {ConstructionKind::star, "star"},
    {ConstructionKind::cycle, "cycle"},
    {ConstructionKind::cycle_pendant, "cycle_pendant"},
    {ConstructionKind::c6_chord, "c6_chord"},
    {ConstructionKind::g_t, "g_t"},
    {ConstructionKind::g_t_prime, "g_t_prime"},
    {ConstructionKind::double_star, "double_star"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

Construction star(int n) {
  require(n >= 2 && n <= kMaxVertices, "star needs 2 <= n <= 64");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return {g, identity_embedding(n)};
}

Construction cycle(int n) {
  require(n >= 3 && n <= kMaxVertices, "cycle needs 3 <= n <= 64");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return {g, identity_embedding(n)};
}

Construction cycle_pendant(int n) {
  require(n >= 4 && n <= kMaxVertices, "cycle_pendant needs 4 <= n <= 64");
  Graph g(n);
  for (Vertex v = 0; v < n - 1; ++v) g.add_edge(v, (v + 1) % (n - 1));
  g.add_edge(0, n - 1);
  OuterEmbedding emb;
  emb.order.push_back(0);
  emb.order.push_back(n - 1);
  for (Vertex v = 1; v < n - 1; ++v) emb.order.push_back(v);
  return {g, emb};
}

Construction c6_chord() {
  Construction c = cycle(6);
  c.graph.add_edge(0, 3);
  return c;
}

// x_i -> i-1, y_{i,i+2} -> t+i-1. The outer cycle runs along the odd-indexed
// x's with their y's, then back along the even-indexed chain.
Construction g_t(int t) {
  require(t >= 2 && 2 * t - 2 <= kMaxVertices, "g_t needs 2 <= t <= 33");
  const int n = 2 * t - 2;
  Graph g(n);
  for (int i = 0; i + 1 < t; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i + 2 < t; ++i) {
    g.add_edge(i, t + i);
    g.add_edge(t + i, i + 2);
  }
  std::array<std::vector<Vertex>, 2> chain;
  for (int parity = 0; parity < 2; ++parity) {
    for (int i = parity; i < t; i += 2) {
      chain[static_cast<std::size_t>(parity)].push_back(i);
      if (i + 2 < t) chain[static_cast<std::size_t>(parity)].push_back(t + i);
    }
  }
  OuterEmbedding emb;
  emb.order = chain[0];
  emb.order.insert(emb.order.end(), chain[1].rbegin(), chain[1].rend());
  return {g, emb};
}

Construction g_t_prime(int t, int n) {
  require(t >= 2, "g_t_prime needs t >= 2");
  require(n >= 2 * t && n <= kMaxVertices, "g_t_prime needs 2t <= n <= 64");
  const Construction base = g_t(t);
  const int core = 2 * t - 2;
  const int per_end = (n - 2 * t + 2) / 2;
  const int first_leaves = n - core - per_end;
  Graph g(n);
  for (const Edge& e : base.graph.edges()) g.add_edge(e.u, e.v);
  const Vertex first = 0;
  const Vertex last = t - 1;
  std::vector<Vertex> first_side, last_side;
  Vertex next = core;
  for (int i = 0; i < first_leaves; ++i, ++next) {
    g.add_edge(first, next);
    first_side.push_back(next);
  }
  for (int i = 0; i < per_end; ++i, ++next) {
    g.add_edge(last, next);
    last_side.push_back(next);
  }
  // Pendant leaves go right next to their attachment on the outer cycle.
  OuterEmbedding emb;
  for (Vertex v : base.embedding.order) {
    if (v == first) emb.order.insert(emb.order.end(), first_side.begin(), first_side.end());
    emb.order.push_back(v);
    if (v == last) emb.order.insert(emb.order.end(), last_side.begin(), last_side.end());
  }
  return {g, emb};
}

}  // namespace

std::string_view to_string(ConstructionKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ConstructionKind parse_construction_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw InvalidArgument("unknown construction kind '" + std::string(name) + "'");
}

Construction build(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::star:
      return star(spec.n);
    case ConstructionKind::cycle:
      return cycle(spec.n);
    case ConstructionKind::cycle_pendant:
      return cycle_pendant(spec.n);
    case ConstructionKind::c6_chord:
      require(spec.n == 0 || spec.n == 6, "c6_chord has exactly 6 vertices");
      return c6_chord();
    case ConstructionKind::g_t:
      return g_t(spec.t);
    case ConstructionKind::g_t_prime:
      return g_t_prime(spec.t, spec.n);
    case ConstructionKind::double_star:
      require(spec.n >= 4, "double_star needs n >= 4");
      return g_t_prime(2, spec.n);
  }
  throw InvalidArgument("unknown construction kind");
}

std::uint64_t fib(int t) {
  require(t >= 1 && t <= 93, "fib needs 1 <= t <= 93");
  std::uint64_t a = 1, b = 1;
  for (int i = 3; i <= t; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

std::uint64_t h_count(int t) {
  require(t >= 2 && t <= 33, "h_count needs 2 <= t <= 33");
  const Construction c = g_t(t);
  return count_induced_paths_between(c.graph, 0, t - 1, t);
}

std::int64_t Rational::floor() const {
  return num >= 0 ? num / den : -((-num + den - 1) / den);
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool leq(std::uint64_t value, const Rational& r) {
  return static_cast<std::int64_t>(value) * r.den <= r.num;
}

bool leq(const Rational& r, std::uint64_t value) {
  return r.num <= static_cast<std::int64_t>(value) * r.den;
}

Rational lower_bound_value(int k, int n) {
  require(k >= 2, "lower_bound_value needs k >= 2");
  require(n >= 2 * k, "lower_bound_value needs n >= 2k");
  const std::int64_t side = n - 2 * k + 3;
  Rational r{static_cast<std::int64_t>(fib(k - 1)) * side * side, 4};
  const std::int64_t g = std::gcd(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

}  // namespace outerpath
