#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the Graph container and are only fit for small inputs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "outerpath/graph.hpp"

namespace oracle {

using outerpath::Edge;
using outerpath::Graph;
using outerpath::Mask;
using outerpath::Vertex;

inline int edges_within(const Graph& g, Mask s) {
  int twice = 0;
  for (Mask m = s; m; m &= m - 1) twice += std::popcount(g.row(std::countr_zero(m)) & s);
  return twice / 2;
}

inline bool connected_within(const Graph& g, Mask s) {
  if (s == 0) return true;
  Mask seen = s & -s;
  for (;;) {
    Mask grow = seen;
    for (Mask m = seen; m; m &= m - 1) grow |= g.row(std::countr_zero(m)) & s;
    if (grow == seen) break;
    seen = grow;
  }
  return seen == s;
}

// s induces a path on |s| vertices: connected, |s|-1 edges, degrees <= 2.
inline bool induces_path(const Graph& g, Mask s) {
  const int k = std::popcount(s);
  if (k == 1) return true;
  if (edges_within(g, s) != k - 1 || !connected_within(g, s)) return false;
  for (Mask m = s; m; m &= m - 1) {
    if (std::popcount(g.row(std::countr_zero(m)) & s) > 2) return false;
  }
  return true;
}

template <class F>
void for_each_subset_of_size(int n, int k, F&& f) {
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) == k) f(s);
  }
}

inline std::uint64_t induced_paths(const Graph& g, int k) {
  std::uint64_t c = 0;
  for_each_subset_of_size(g.vertex_count(), k, [&](Mask s) { c += induces_path(g, s); });
  return c;
}

inline std::uint64_t induced_paths_between(const Graph& g, Vertex x, Vertex y, int k) {
  std::uint64_t c = 0;
  const Mask ends = outerpath::bit(x) | outerpath::bit(y);
  for_each_subset_of_size(g.vertex_count(), k, [&](Mask s) {
    if ((s & ends) != ends || !induces_path(g, s)) return;
    if (k == 2) {
      c += 1;
      return;
    }
    c += std::popcount(g.row(x) & s) == 1 && std::popcount(g.row(y) & s) == 1;
  });
  return c;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (a.relabeled(p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Chords a-b and c-d of a convex polygon (positions) cross.
inline bool cross(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// Triangulations of the convex n-gon as sets of n-3 pairwise non-crossing
// diagonals, enumerated by increasing diagonal index.
inline std::vector<Graph> triangulations(int n) {
  std::vector<Edge> diagonals;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (!(i == 0 && j == n - 1)) diagonals.push_back({i, j});
    }
  }
  std::vector<Graph> out;
  std::vector<Edge> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == n - 3) {
      Graph g(n);
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      for (const Edge& e : chosen) g.add_edge(e.u, e.v);
      out.push_back(g);
      return;
    }
    for (std::size_t i = from; i < diagonals.size(); ++i) {
      const Edge& d = diagonals[i];
      if (std::any_of(chosen.begin(), chosen.end(), [&](const Edge& c) { return cross(c.u, c.v, d.u, d.v); })) continue;
      chosen.push_back(d);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Outerplanarity by existence of a crossing-free cyclic order (n <= 8).
inline bool outerplanar_by_orders(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 3) return true;
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const auto edges = g.edges();
  do {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    bool ok = true;
    for (std::size_t i = 0; ok && i < edges.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < edges.size(); ++j) {
        ok = !cross(pos[static_cast<std::size_t>(edges[i].u)], pos[static_cast<std::size_t>(edges[i].v)],
                    pos[static_cast<std::size_t>(edges[j].u)], pos[static_cast<std::size_t>(edges[j].v)]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
