#include "outerpath/graph.hpp"

#include <sstream>

#include "outerpath/errors.hpp"

namespace outerpath {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n=" +
                          std::to_string(g.vertex_count()));
  }
}

}  // namespace

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("graph order must be in 1..64, got " + std::to_string(n));
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Mask m = row(u) & ~low_bits(u + 1); m != 0; m &= m - 1) {
      out.push_back({u, std::countr_zero(m)});
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw InvalidArgument("permutation length does not match graph order");
  }
  Mask seen = 0;
  for (Vertex p : perm) {
    if (p < 0 || p >= n_ || (seen & bit(p))) throw InvalidArgument("not a permutation");
    seen |= bit(p);
  }
  Graph out(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Mask m = row(u); m != 0; m &= m - 1) {
      Vertex v = std::countr_zero(m);
      out.adj_[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] |=
          bit(perm[static_cast<std::size_t>(v)]);
    }
  }
  return out;
}

int degree(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return std::popcount(g.row(v));
}

VertexSet neighbors(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return VertexSet(g.row(v));
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw InvalidArgument("induced_subgraph: empty vertex set");
  if (s.mask() & ~low_bits(g.vertex_count())) {
    throw InvalidArgument("induced_subgraph: vertex set exceeds graph order");
  }
  const std::vector<Vertex> keep = s.members();
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return out;
}

bool is_connected_within(const Graph& g, Mask within) {
  if (within == 0) return true;
  Mask seen = within & (~within + 1);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask m = frontier; m != 0; m &= m - 1) next |= g.row(std::countr_zero(m));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}

bool is_connected(const Graph& g) { return is_connected_within(g, low_bits(g.vertex_count())); }

VertexSet cut_vertices(const Graph& g) {
  // A vertex is a cut vertex when deleting it disconnects its own component.
  const Mask all = low_bits(g.vertex_count());
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Mask comp = bit(v);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask m = frontier; m != 0; m &= m - 1) next |= g.row(std::countr_zero(m));
      next &= all & ~comp;
      comp |= next;
      frontier = next;
    }
    if (!is_connected_within(g, comp & ~bit(v))) out.insert(v);
  }
  return out;
}

bool is_two_connected(const Graph& g) {
  return g.vertex_count() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace outerpath
