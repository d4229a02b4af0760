#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "outerpath/graph.hpp"

namespace outerpath {

/// Cyclic vertex order of an outerplanar drawing: order[i] is the vertex at
/// outer-cycle position i, counter-clockwise.
struct OuterEmbedding {
  std::vector<Vertex> order;

  int size() const { return static_cast<int>(order.size()); }
  /// position[v] = index of v in order. Requires order to be a permutation.
  std::vector<int> positions() const;

  friend bool operator==(const OuterEmbedding&, const OuterEmbedding&) = default;
};

/// 0,1,...,n-1.
OuterEmbedding identity_embedding(int n);

/// Parses "3,0,1,2". Throws ParseError on malformed text.
OuterEmbedding parse_order(std::string_view text);
std::string format_order(const OuterEmbedding& emb);

/// Largest n accepted by the subdivision-search recognizer.
inline constexpr int kSubdivisionSearchMaxVertices = 16;

/// K4 and K_{2,3} have maximum degree 3, so containing either as a minor is
/// equivalent to containing a subdivision of it. Both searches work on
/// branch vertices plus internally vertex-disjoint connecting paths.
bool has_k4_subdivision(const Graph& g);
bool has_k23_subdivision(const Graph& g);

/// No K4 and no K_{2,3} subdivision. Graphs with more than 2n-3 edges are
/// rejected immediately; otherwise n <= 16 is required (UnsupportedSize).
bool is_outerplanar(const Graph& g);

/// True iff no two chords interleave in the cyclic order. Cycle-consecutive
/// pairs are never chords. Throws InvalidArgument if emb is not a
/// permutation of g's vertices.
bool verify_embedding(const Graph& g, const OuterEmbedding& emb);

/// The unique Hamiltonian cycle of a 2-connected outerplanar graph, rotated to
/// start at vertex 0 and oriented toward the smaller of 0's cycle neighbours.
/// Throws PreconditionError when g is not 2-connected or not outerplanar.
OuterEmbedding outer_cycle(const Graph& g);

/// The two walks from x to y along the outer cycle: first counter-clockwise
/// (increasing position), then clockwise. Both start at x and end at y.
std::pair<std::vector<Vertex>, std::vector<Vertex>> side_walks(const OuterEmbedding& emb, Vertex x,
                                                               Vertex y);

/// Bounded faces of g together with the outer cycle of emb, each face listed in
/// cyclic order starting from its leftmost position. Faces are sorted by
/// their position sequences. Requires verify_embedding(g, emb).
std::vector<std::vector<Vertex>> interior_faces(const Graph& g, const OuterEmbedding& emb);

/// Adds the outer cycle of emb and fans every bounded face into triangles.
/// Result has 2n-3 edges for n >= 3. Throws PreconditionError for an invalid embedding.
Graph maximal_completion(const Graph& g, const OuterEmbedding& emb);

}  // namespace outerpath
