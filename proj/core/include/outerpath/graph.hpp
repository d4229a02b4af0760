#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace outerpath {

using Mask = std::uint64_t;
using Vertex = int;

inline constexpr int kMaxVertices = 64;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A set of vertex indices backed by a single 64-bit word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask mask) : mask_(mask) {}

  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  static constexpr VertexSet all(int n) { return VertexSet(low_bits(n)); }

  constexpr Mask mask() const { return mask_; }
  constexpr bool contains(Vertex v) const { return (mask_ >> v) & 1U; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr void insert(Vertex v) { mask_ |= bit(v); }
  constexpr void erase(Vertex v) { mask_ &= ~bit(v); }

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(mask_ & o.mask_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(mask_ | o.mask_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(mask_ & ~o.mask_); }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  Mask mask_ = 0;
};

/// Simple undirected graph on 1..64 vertices with one adjacency word per vertex.
///
/// Rows beyond n and bits beyond n are always zero, so defaulted equality is
/// structural equality of labeled graphs.
class Graph {
 public:
  /// Edgeless graph on n vertices. Throws InvalidArgument unless 1 <= n <= 64.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int vertex_count() const { return n_; }
  int edge_count() const;

  Mask row(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(Vertex u, Vertex v) const { return (row(u) >> v) & 1U; }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  /// Unchecked symmetric toggle, for hot enumeration loops.
  void toggle_edge(Vertex u, Vertex v) {
    adj_[static_cast<std::size_t>(u)] ^= bit(v);
    adj_[static_cast<std::size_t>(v)] ^= bit(u);
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::array<Mask, kMaxVertices> adj_{};
};

int degree(const Graph& g, Vertex v);
VertexSet neighbors(const Graph& g, Vertex v);

/// Subgraph induced by s, relabeled 0..|s|-1 in ascending original index.
Graph induced_subgraph(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);
/// Connectivity of the subgraph induced by `within` (true for empty or singleton sets).
bool is_connected_within(const Graph& g, Mask within);
VertexSet cut_vertices(const Graph& g);
bool is_two_connected(const Graph& g);

/// Lexicographically least column-major upper triangle over all relabelings,
/// returned as graph6 text. Equal strings iff isomorphic graphs. n <= 9.
std::string canonical_form(const Graph& g);
/// Relabeling of g whose graph6 encoding is canonical_form(g).
Graph canonical_graph(const Graph& g);

inline constexpr int kCanonicalMaxVertices = 9;

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace outerpath
