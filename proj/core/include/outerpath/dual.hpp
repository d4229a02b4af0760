#pragma once

#include <string>
#include <utility>
#include <vector>

#include "outerpath/graph.hpp"
#include "outerpath/outerplanarity.hpp"

namespace outerpath {

/// Unrooted tree on nodes 0..node_count-1.
struct Tree {
  int node_count = 0;
  std::vector<Edge> edges;

  int max_degree() const;
  /// Connected and acyclic with node_count - 1 edges.
  bool is_tree() const;
};

/// Weak dual of an embedded maximal outerplanar graph: one node per bounded
/// face, adjacent when two faces share a chord.
struct DualTree {
  std::vector<std::vector<Vertex>> faces;  // cyclic vertex lists
  std::vector<Edge> edges;                 // pairs of face indices
  std::vector<Edge> shared_edge;           // host chord for edges[i]

  Tree as_tree() const;
  std::string to_dot() const;
};

/// Requires e(g) = 2n-3, n >= 3 and a valid embedding (PreconditionError otherwise).
DualTree weak_dual(const Graph& g, const OuterEmbedding& emb);

struct EdgeCut {
  Edge edge;
  int smaller_side = 0;
  int larger_side = 0;
};

/// Edge of t maximizing the smaller component of t - e. Requires max degree
/// <= k, k >= 3 and at least two nodes. Both sides of the returned edge have
/// at least (n-1)/k nodes; InvariantViolation is raised if that ever fails.
EdgeCut balanced_edge_cut(const Tree& t, int k);

/// Node counts of the two components of t - e, in the order (side of e.u, side of e.v).
std::pair<int, int> component_sizes(const Tree& t, Edge e);

/// Vertex sets of the two sides of xy along emb, both containing x and y.
std::pair<VertexSet, VertexSet> split_by_chord(const Graph& g, const OuterEmbedding& emb, Edge chord);

}  // namespace outerpath
