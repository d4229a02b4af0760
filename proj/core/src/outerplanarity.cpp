#include "outerpath/outerplanarity.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "outerpath/errors.hpp"

namespace outerpath {

std::vector<int> OuterEmbedding::positions() const {
  std::vector<int> pos(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  }
  return pos;
}

OuterEmbedding identity_embedding(int n) {
  OuterEmbedding emb;
  emb.order.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) emb.order[static_cast<std::size_t>(i)] = i;
  return emb;
}

OuterEmbedding parse_order(std::string_view text) {
  OuterEmbedding emb;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || value < 0) throw ParseError("order: expected a vertex index", pos);
    emb.order.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("order: expected ','", pos);
    ++pos;
  }
  return emb;
}

std::string format_order(const OuterEmbedding& emb) {
  std::ostringstream os;
  for (std::size_t i = 0; i < emb.order.size(); ++i) {
    if (i) os << ',';
    os << emb.order[i];
  }
  return os.str();
}

namespace {

void require_permutation(const Graph& g, const OuterEmbedding& emb) {
  const int n = g.vertex_count();
  if (emb.size() != n) throw InvalidArgument("embedding length does not match graph order");
  Mask seen = 0;
  for (Vertex v : emb.order) {
    if (v < 0 || v >= n || (seen & bit(v))) {
      throw InvalidArgument("embedding order is not a permutation of the vertices");
    }
    seen |= bit(v);
  }
}

// Series reduction: drop vertices of degree <= 1 and suppress degree-2
// vertices. Both moves preserve whether a K4 subdivision exists.
Graph reduce_for_k4(const Graph& g, Mask& alive) {
  Graph h = g;
  alive = low_bits(g.vertex_count());
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask m = alive; m != 0; m &= m - 1) {
      const Vertex v = std::countr_zero(m);
      const Mask nb = h.row(v);
      const int d = std::popcount(nb);
      if (d > 2) continue;
      for (Mask r = nb; r != 0; r &= r - 1) h.remove_edge(v, std::countr_zero(r));
      if (d == 2) {
        const Vertex a = std::countr_zero(nb);
        const Vertex b = 63 - std::countl_zero(nb);
        if (!h.has_edge(a, b)) h.add_edge(a, b);
      }
      alive &= ~bit(v);
      changed = true;
    }
  }
  return h;
}

class DisjointPathRouter {
 public:
  DisjointPathRouter(const Graph& g, Mask usable) : g_(g), usable_(usable) {}

  // Routes every pair with internally disjoint paths whose interiors avoid
  // `blocked` and each other.
  bool route_all(const std::vector<Edge>& pairs, Mask blocked) {
    return route_from(pairs, 0, blocked);
  }

 private:
  bool route_from(const std::vector<Edge>& pairs, std::size_t idx, Mask blocked) {
    if (idx == pairs.size()) return true;
    for (std::size_t k = idx; k < pairs.size(); ++k) {
      if (!reachable(pairs[k].u, pairs[k].v, blocked)) return false;
    }
    return extend(pairs, idx, pairs[idx].u, blocked);
  }

  bool extend(const std::vector<Edge>& pairs, std::size_t idx, Vertex cur, Mask blocked) {
    const Vertex target = pairs[idx].v;
    if (g_.has_edge(cur, target)) {
      if (route_from(pairs, idx + 1, blocked)) return true;
    }
    for (Mask m = g_.row(cur) & usable_ & ~blocked; m != 0; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      if (!reachable(w, target, blocked | bit(w))) continue;
      if (extend(pairs, idx, w, blocked | bit(w))) return true;
    }
    return false;
  }

  bool reachable(Vertex from, Vertex to, Mask blocked) const {
    if (g_.has_edge(from, to)) return true;
    const Mask open = usable_ & ~blocked;
    Mask seen = bit(from);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask m = frontier; m != 0; m &= m - 1) next |= g_.row(std::countr_zero(m));
      if (next & bit(to)) return true;
      next &= open & ~seen;
      seen |= next;
      frontier = next;
    }
    return false;
  }

  const Graph& g_;
  Mask usable_;
};

// Maximum number of internally vertex-disjoint s-t paths of length >= 2,
// capped at `limit`, via unit-capacity augmenting paths on split vertices.
int disjoint_long_paths(const Graph& g, Vertex s, Vertex t, int limit) {
  const int n = g.vertex_count();
  const int nodes = 2 * n;
  std::array<std::array<std::uint8_t, 2 * kSubdivisionSearchMaxVertices>,
             2 * kSubdivisionSearchMaxVertices>
      cap{};
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  for (Vertex v = 0; v < n; ++v) {
    cap[static_cast<std::size_t>(in(v))][static_cast<std::size_t>(out(v))] = (v == s || v == t) ? 2 : 1;
    for (Mask m = g.row(v); m != 0; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      if ((v == s && w == t) || (v == t && w == s)) continue;
      cap[static_cast<std::size_t>(out(v))][static_cast<std::size_t>(in(w))] = 1;
    }
  }
  const int source = out(s);
  const int sink = in(t);
  int flow = 0;
  while (flow < limit) {
    std::array<int, 2 * kSubdivisionSearchMaxVertices> parent;
    parent.fill(-1);
    parent[static_cast<std::size_t>(source)] = source;
    std::array<int, 2 * kSubdivisionSearchMaxVertices> queue{};
    int head = 0, tail = 0;
    queue[static_cast<std::size_t>(tail++)] = source;
    while (head < tail && parent[static_cast<std::size_t>(sink)] < 0) {
      const int x = queue[static_cast<std::size_t>(head++)];
      for (int y = 0; y < nodes; ++y) {
        if (parent[static_cast<std::size_t>(y)] < 0 &&
            cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0) {
          parent[static_cast<std::size_t>(y)] = x;
          queue[static_cast<std::size_t>(tail++)] = y;
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) break;
    for (int y = sink; y != source; y = parent[static_cast<std::size_t>(y)]) {
      const int x = parent[static_cast<std::size_t>(y)];
      --cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      ++cap[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    }
    ++flow;
  }
  return flow;
}

void require_search_size(const Graph& g) {
  if (g.vertex_count() > kSubdivisionSearchMaxVertices) {
    throw UnsupportedSize("subdivision search supports n <= 16 without an embedding certificate, got n=" +
                          std::to_string(g.vertex_count()));
  }
}

}  // namespace

bool has_k4_subdivision(const Graph& g) {
  require_search_size(g);
  Mask alive = 0;
  const Graph h = reduce_for_k4(g, alive);
  if (std::popcount(alive) < 4) return false;

  std::vector<Vertex> branch;
  for (Mask m = alive; m != 0; m &= m - 1) {
    const Vertex v = std::countr_zero(m);
    if (std::popcount(h.row(v)) >= 3) branch.push_back(v);
  }
  DisjointPathRouter router(h, alive);
  const std::size_t b = branch.size();
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) {
      for (std::size_t k = j + 1; k < b; ++k) {
        for (std::size_t l = k + 1; l < b; ++l) {
          const std::array<Vertex, 4> q{branch[i], branch[j], branch[k], branch[l]};
          std::vector<Edge> pairs;
          for (int x = 0; x < 4; ++x) {
            for (int y = x + 1; y < 4; ++y) pairs.push_back({q[static_cast<std::size_t>(x)], q[static_cast<std::size_t>(y)]});
          }
          const Mask blocked = bit(q[0]) | bit(q[1]) | bit(q[2]) | bit(q[3]);
          if (router.route_all(pairs, blocked)) return true;
        }
      }
    }
  }
  return false;
}

bool has_k23_subdivision(const Graph& g) {
  require_search_size(g);
  const int n = g.vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    if (std::popcount(g.row(s)) < 3) continue;
    for (Vertex t = s + 1; t < n; ++t) {
      if (std::popcount(g.row(t)) < 3) continue;
      if (disjoint_long_paths(g, s, t, 3) >= 3) return true;
    }
  }
  return false;
}

bool is_outerplanar(const Graph& g) {
  const int n = g.vertex_count();
  if (n >= 3 && g.edge_count() > 2 * n - 3) return false;
  if (n <= 3) return true;
  require_search_size(g);
  return !has_k4_subdivision(g) && !has_k23_subdivision(g);
}

bool verify_embedding(const Graph& g, const OuterEmbedding& emb) {
  require_permutation(g, emb);
  const int n = g.vertex_count();
  const std::vector<int> pos = emb.positions();
  std::vector<std::pair<int, int>> chords;
  for (const Edge& e : g.edges()) {
    int a = pos[static_cast<std::size_t>(e.u)];
    int b = pos[static_cast<std::size_t>(e.v)];
    if (a > b) std::swap(a, b);
    if (b - a == 1 || b - a == n - 1) continue;
    chords.emplace_back(a, b);
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const auto [a, b] = chords[i];
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const auto [c, d] = chords[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

namespace {

class HamiltonianSearch {
 public:
  explicit HamiltonianSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  bool find(std::vector<Vertex>& cycle) {
    path_.assign(1, 0);
    if (!extend(bit(0))) return false;
    cycle = path_;
    return true;
  }

 private:
  bool extend(Mask used) {
    const Vertex last = path_.back();
    if (static_cast<int>(path_.size()) == n_) return g_.has_edge(last, 0);
    const Mask all = low_bits(n_);
    for (Mask m = g_.row(last) & ~used; m != 0; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      const Mask next_used = used | bit(w);
      // Every unvisited vertex still needs two usable neighbours
      // (counting the path ends and vertex 0 for closing).
      bool viable = true;
      const Mask ends = bit(w) | bit(0);
      for (Mask r = all & ~next_used; r != 0; r &= r - 1) {
        const Vertex u = std::countr_zero(r);
        if (std::popcount(g_.row(u) & ((all & ~next_used) | ends)) < 2) {
          viable = false;
          break;
        }
      }
      if (!viable) continue;
      path_.push_back(w);
      if (extend(next_used)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> path_;
};

}  // namespace

OuterEmbedding outer_cycle(const Graph& g) {
  if (!is_two_connected(g)) throw PreconditionError("outer_cycle: graph is not 2-connected");
  std::vector<Vertex> cycle;
  if (!HamiltonianSearch(g).find(cycle)) {
    throw PreconditionError("outer_cycle: no Hamiltonian cycle, graph is not outerplanar");
  }
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  OuterEmbedding emb{cycle};
  // A 2-connected outerplanar graph has exactly one Hamiltonian cycle, so a
  // crossing here means the graph is not outerplanar.
  if (!verify_embedding(g, emb)) {
    throw PreconditionError("outer_cycle: Hamiltonian cycle has crossing chords, graph is not outerplanar");
  }
  return emb;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> side_walks(const OuterEmbedding& emb, Vertex x,
                                                               Vertex y) {
  const int n = emb.size();
  Mask seen = 0;
  for (Vertex v : emb.order) {
    if (v < 0 || v >= n || (seen & bit(v))) throw InvalidArgument("side_walks: order is not a permutation");
    seen |= bit(v);
  }
  const std::vector<int> pos = emb.positions();
  if (x < 0 || y < 0 || x >= n || y >= n || x == y) throw InvalidArgument("side_walks: bad endpoints");
  std::vector<Vertex> ccw, cw;
  for (int p = pos[static_cast<std::size_t>(x)];; p = (p + 1) % n) {
    ccw.push_back(emb.order[static_cast<std::size_t>(p)]);
    if (emb.order[static_cast<std::size_t>(p)] == y) break;
  }
  for (int p = pos[static_cast<std::size_t>(x)];; p = (p + n - 1) % n) {
    cw.push_back(emb.order[static_cast<std::size_t>(p)]);
    if (emb.order[static_cast<std::size_t>(p)] == y) break;
  }
  return {std::move(ccw), std::move(cw)};
}

namespace {

void split_faces(const Graph& g, const OuterEmbedding& emb, std::vector<int> poly,
                 std::vector<std::vector<int>>& out) {
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (!g.has_edge(emb.order[static_cast<std::size_t>(poly[i])],
                      emb.order[static_cast<std::size_t>(poly[j])])) {
        continue;
      }
      std::vector<int> inner(poly.begin() + static_cast<std::ptrdiff_t>(i),
                             poly.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      std::vector<int> outer(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      outer.insert(outer.end(), poly.begin() + static_cast<std::ptrdiff_t>(j), poly.end());
      split_faces(g, emb, std::move(inner), out);
      split_faces(g, emb, std::move(outer), out);
      return;
    }
  }
  out.push_back(std::move(poly));
}

}  // namespace

std::vector<std::vector<Vertex>> interior_faces(const Graph& g, const OuterEmbedding& emb) {
  if (!verify_embedding(g, emb)) throw PreconditionError("interior_faces: embedding has crossing chords");
  const int n = g.vertex_count();
  if (n < 3) return {};
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> by_position;
  split_faces(g, emb, std::move(all), by_position);
  std::sort(by_position.begin(), by_position.end());
  std::vector<std::vector<Vertex>> faces;
  faces.reserve(by_position.size());
  for (const auto& poly : by_position) {
    std::vector<Vertex> face;
    face.reserve(poly.size());
    for (int p : poly) face.push_back(emb.order[static_cast<std::size_t>(p)]);
    faces.push_back(std::move(face));
  }
  return faces;
}

Graph maximal_completion(const Graph& g, const OuterEmbedding& emb) {
  if (!verify_embedding(g, emb)) throw PreconditionError("maximal_completion: embedding has crossing chords");
  const int n = g.vertex_count();
  Graph out = g;
  for (int i = 0; i + 1 < n; ++i) {
    const Vertex a = emb.order[static_cast<std::size_t>(i)];
    const Vertex b = emb.order[static_cast<std::size_t>(i + 1)];
    if (!out.has_edge(a, b)) out.add_edge(a, b);
  }
  if (n >= 3 && !out.has_edge(emb.order.front(), emb.order.back())) {
    out.add_edge(emb.order.front(), emb.order.back());
  }
  for (const auto& face : interior_faces(out, emb)) {
    // Ear at position 1 each time: connect face[0] to face[i + 1] across face[i].
    for (std::size_t i = 2; i + 1 < face.size(); ++i) out.add_edge(face[0], face[i]);
  }
  return out;
}

}  // namespace outerpath
