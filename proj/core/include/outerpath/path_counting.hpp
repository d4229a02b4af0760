#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "outerpath/graph.hpp"
#include "outerpath/outerplanarity.hpp"

namespace outerpath {

struct PathCount {
  int k = 0;
  std::uint64_t copies = 0;

  friend bool operator==(const PathCount&, const PathCount&) = default;
};

namespace detail {

// Depth-first extension of an induced path. `forbidden` holds every path
// vertex plus the closed neighbourhood of every non-terminal path vertex, so
// each candidate extends the path to another induced path.
template <class Visitor>
void extend_induced(const Graph& g, std::array<Vertex, kMaxVertices>& path, int len, int k,
                    Mask forbidden, Visitor& visit) {
  const Vertex last = path[static_cast<std::size_t>(len - 1)];
  const Mask next_forbidden = forbidden | g.row(last) | bit(last);
  for (Mask m = g.row(last) & ~forbidden; m != 0; m &= m - 1) {
    const Vertex w = std::countr_zero(m);
    path[static_cast<std::size_t>(len)] = w;
    if (len + 1 == k) {
      if (w > path[0]) visit(std::span<const Vertex>(path.data(), static_cast<std::size_t>(k)));
    } else {
      extend_induced(g, path, len + 1, k, next_forbidden, visit);
    }
  }
}

}  // namespace detail

/// Calls visit(span of k vertices) once per induced k-vertex path, listed from
/// its lower-indexed endpoint.
template <class Visitor>
void for_each_induced_path(const Graph& g, int k, Visitor&& visit) {
  std::array<Vertex, kMaxVertices> path{};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    path[0] = v;
    if (k == 1) {
      visit(std::span<const Vertex>(path.data(), 1));
      continue;
    }
    detail::extend_induced(g, path, 1, k, bit(v), visit);
  }
}

/// Unordered induced copies of P_k. Throws InvalidArgument unless 1 <= k <= n.
PathCount count_induced_paths(const Graph& g, int k);

/// Sum over v of C(deg v, 2) minus the edges inside N(v).
std::uint64_t count_induced_p3_closed_form(const Graph& g);

/// Induced k-vertex paths whose endpoints are exactly x and y.
std::uint64_t count_induced_paths_between(const Graph& g, Vertex x, Vertex y, int k);

/// counts[x][y][len] for every induced path on len vertices with endpoints
/// x < y, len in 2..max_len. Entries with x >= y stay zero.
class EndpointCensus {
 public:
  EndpointCensus(const Graph& g, int max_len);

  std::uint64_t count(Vertex x, Vertex y, int len) const;
  /// Largest count over all endpoint pairs for paths on len vertices.
  std::uint64_t max_for_length(int len) const;
  int max_len() const { return max_len_; }

 private:
  int n_;
  int max_len_;
  std::vector<std::uint64_t> counts_;
};

/// Induced k-vertex paths meeting both strict sides of the split of emb by xy.
std::uint64_t phi(const Graph& g, const OuterEmbedding& emb, Edge chord, int k = 4);

/// One side of the split by xy, walked from x to y. For the counter-clockwise
/// side the fields are s1, s2, p1, p2 and A, B1, B2, D1, D2; for the clockwise
/// side they are t1, t2, q1, q2 and the primed classes.
struct SideStats {
  std::vector<Vertex> walk;   // x, ..., y
  int size = 0;               // n1 or n2
  int x_neighbors = 0;        // |N(x) \ {y}| on this side
  int x_p3 = 0;               // induced P3 x-u-w on this side avoiding y
  int y_neighbors = 0;
  int y_p3 = 0;
  VertexSet x_side;           // N(x) \ {y} on this side
  VertexSet y_side;           // N(y) \ {x} on this side
  VertexSet a, b1, b2, d1, d2;
  bool has_v_ell = false;     // last x-neighbour is also the first y-neighbour
  bool has_v_x = false;
  bool has_v_y = false;
  int v_x_candidates = 0;     // members of B1 u D1 adjacent to the first y-neighbour
  int v_y_candidates = 0;     // members of B2 u D2 adjacent to the last x-neighbour
};

struct ChordStats {
  Vertex x = 0;
  Vertex y = 0;
  int n = 0;
  SideStats inner;  // counter-clockwise from x to y
  SideStats outer;  // clockwise from x to y

  int n1() const { return inner.size; }
  int n2() const { return outer.size; }
  int s1() const { return inner.x_neighbors; }
  int s2() const { return inner.x_p3; }
  int p1() const { return inner.y_neighbors; }
  int p2() const { return inner.y_p3; }
  int t1() const { return outer.x_neighbors; }
  int t2() const { return outer.x_p3; }
  int q1() const { return outer.y_neighbors; }
  int q2() const { return outer.y_p3; }
};

/// Requires xy to be an edge and emb to be valid for g (InvalidArgument /
/// PreconditionError otherwise).
ChordStats chord_stats(const Graph& g, const OuterEmbedding& emb, Edge chord);

/// phi(xy) <= s1 q1 + t1 p1 + s1 t2 + s2 t1 + p1 q2 + p2 q1.
bool check_eq1(const Graph& g, const OuterEmbedding& emb, Edge chord);

struct ChordCheck {
  std::string name;
  bool holds = true;
  std::string detail;
};

/// Evaluates every structural fact and inequality of the crossing-path
/// argument for one chord orientation. Check names:
///   sides_total, ordering (x-neighbours precede y-neighbours),
///   gap_single_contribution, gap_double_contribution_unique,
///   partition, d_odd, v_x_unique, v_y_unique,
///   {inner,outer}.{budget,x_degree,y_degree,x_p3,y_p3},
///   crossing_by_type, crossing_quadratic.
std::vector<ChordCheck> audit_chord(const Graph& g, const OuterEmbedding& emb, Edge chord);

}  // namespace outerpath
