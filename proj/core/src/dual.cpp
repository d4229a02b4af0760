#include "outerpath/dual.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "outerpath/errors.hpp"

namespace outerpath {

namespace {

std::vector<std::vector<int>> adjacency(const Tree& t) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.node_count));
  for (const Edge& e : t.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

}  // namespace

int Tree::max_degree() const {
  std::vector<int> deg(static_cast<std::size_t>(node_count), 0);
  for (const Edge& e : edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool Tree::is_tree() const {
  if (node_count < 1 || static_cast<int>(edges.size()) != node_count - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(node_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count) return false;
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

Tree DualTree::as_tree() const { return Tree{static_cast<int>(faces.size()), edges}; }

std::string DualTree::to_dot() const {
  std::ostringstream os;
  os << "graph dual {\n";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    os << "  f" << i << " [label=\"";
    for (std::size_t j = 0; j < faces[i].size(); ++j) os << (j ? "," : "") << faces[i][j];
    os << "\"];\n";
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << "  f" << edges[i].u << " -- f" << edges[i].v << " [label=\"" << shared_edge[i].u << "-"
       << shared_edge[i].v << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

DualTree weak_dual(const Graph& g, const OuterEmbedding& emb) {
  const int n = g.vertex_count();
  if (n < 3) throw PreconditionError("weak_dual needs at least 3 vertices");
  if (g.edge_count() != 2 * n - 3) {
    throw PreconditionError("weak_dual needs a maximal outerplanar graph (2n-3 edges); run maximal_completion first");
  }
  if (!verify_embedding(g, emb)) throw PreconditionError("weak_dual: embedding has crossing chords");

  DualTree dual;
  dual.faces = interior_faces(g, emb);
  std::map<Edge, std::vector<int>> by_side;
  for (std::size_t f = 0; f < dual.faces.size(); ++f) {
    const auto& face = dual.faces[f];
    if (face.size() != 3) throw PreconditionError("weak_dual: bounded face is not a triangle");
    for (std::size_t i = 0; i < face.size(); ++i) {
      Vertex a = face[i];
      Vertex b = face[(i + 1) % face.size()];
      if (a > b) std::swap(a, b);
      by_side[{a, b}].push_back(static_cast<int>(f));
    }
  }
  for (const auto& [side, owners] : by_side) {
    if (owners.size() == 2) {
      dual.edges.push_back({owners[0], owners[1]});
      dual.shared_edge.push_back(side);
    }
  }
  return dual;
}

std::pair<int, int> component_sizes(const Tree& t, Edge e) {
  const auto adj = adjacency(t);
  std::vector<char> seen(static_cast<std::size_t>(t.node_count), 0);
  std::vector<int> stack{e.u};
  seen[static_cast<std::size_t>(e.u)] = 1;
  int count = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if ((v == e.u && w == e.v) || (v == e.v && w == e.u)) continue;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return {count, t.node_count - count};
}

EdgeCut balanced_edge_cut(const Tree& t, int k) {
  if (k < 3) throw PreconditionError("balanced_edge_cut needs k >= 3");
  if (t.node_count < 2) throw PreconditionError("balanced_edge_cut needs at least two nodes");
  if (!t.is_tree()) throw PreconditionError("balanced_edge_cut: input is not a tree");
  if (t.max_degree() > k) {
    throw PreconditionError("balanced_edge_cut: max degree " + std::to_string(t.max_degree()) +
                            " exceeds k=" + std::to_string(k));
  }
  const int n = t.node_count;
  const auto adj = adjacency(t);

  // Preorder from node 0; subtree sizes accumulate in reverse preorder.
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> subtree(static_cast<std::size_t>(n), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) subtree[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] += subtree[static_cast<std::size_t>(*it)];
  }

  EdgeCut best{{-1, -1}, -1, -1};
  for (const Edge& e : t.edges) {
    const int child = parent[static_cast<std::size_t>(e.v)] == e.u ? e.v : e.u;
    const int below = subtree[static_cast<std::size_t>(child)];
    const int small = std::min(below, n - below);
    if (small > best.smaller_side) best = {e, small, n - small};
  }
  if (static_cast<long long>(k) * best.smaller_side < n - 1) {
    throw InvariantViolation("balanced_edge_cut: no edge leaves both sides with (n-1)/k nodes");
  }
  return best;
}

std::pair<VertexSet, VertexSet> split_by_chord(const Graph& g, const OuterEmbedding& emb, Edge chord) {
  const int n = g.vertex_count();
  if (chord.u < 0 || chord.v < 0 || chord.u >= n || chord.v >= n || chord.u == chord.v ||
      !g.has_edge(chord.u, chord.v)) {
    throw InvalidArgument("split_by_chord: not an edge");
  }
  const auto [ccw, cw] = side_walks(emb, chord.u, chord.v);
  VertexSet left, right;
  for (Vertex v : ccw) left.insert(v);
  for (Vertex v : cw) right.insert(v);
  return {left, right};
}

}  // namespace outerpath
