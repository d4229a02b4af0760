#include <algorithm>
#include <sstream>

#include "outerpath/errors.hpp"
#include "outerpath/path_counting.hpp"

namespace outerpath {

namespace {

void require_chord(const Graph& g, const OuterEmbedding& emb, Edge chord) {
  const int n = g.vertex_count();
  if (chord.u < 0 || chord.v < 0 || chord.u >= n || chord.v >= n || chord.u == chord.v ||
      !g.has_edge(chord.u, chord.v)) {
    throw InvalidArgument("chord " + std::to_string(chord.u) + "-" + std::to_string(chord.v) +
                          " is not an edge");
  }
  if (!verify_embedding(g, emb)) throw PreconditionError("embedding has crossing chords");
}

Mask mask_of(const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

// Walk indices (0 = x, size-1 = y) of the members of `set`, ascending.
std::vector<int> indices_in_walk(const std::vector<Vertex>& walk, VertexSet set) {
  std::vector<int> out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (set.contains(walk[i])) out.push_back(static_cast<int>(i));
  }
  return out;
}

Mask walk_range(const std::vector<Vertex>& walk, int from, int to) {
  Mask m = 0;
  for (int i = from; i <= to; ++i) m |= bit(walk[static_cast<std::size_t>(i)]);
  return m;
}

// Number of induced P3 end-u-w with u, w on this side and w != avoid.
int count_p3_from(const Graph& g, Vertex end, Vertex avoid, Mask side) {
  int total = 0;
  const Mask first = g.row(end) & side & ~bit(avoid);
  for (Mask m = first; m != 0; m &= m - 1) {
    const Vertex u = std::countr_zero(m);
    total += std::popcount(g.row(u) & side & ~bit(avoid) & ~bit(end) & ~g.row(end));
  }
  return total;
}

SideStats side_stats(const Graph& g, std::vector<Vertex> walk) {
  SideStats s;
  const Vertex x = walk.front();
  const Vertex y = walk.back();
  const Mask side = mask_of(walk);
  const Mask interior = side & ~bit(x) & ~bit(y);
  s.size = static_cast<int>(walk.size());
  s.x_side = VertexSet(g.row(x) & interior);
  s.y_side = VertexSet(g.row(y) & interior);
  s.x_neighbors = s.x_side.size();
  s.y_neighbors = s.y_side.size();
  s.x_p3 = count_p3_from(g, x, y, side);
  s.y_p3 = count_p3_from(g, y, x, side);

  const std::vector<int> xi = indices_in_walk(walk, s.x_side);
  const std::vector<int> yj = indices_in_walk(walk, s.y_side);
  const Mask xs = s.x_side.mask();
  const Mask ys = s.y_side.mask();

  Mask a = 0;
  for (Mask m = interior & ~xs & ~ys; m != 0; m &= m - 1) {
    const Vertex w = std::countr_zero(m);
    if (std::popcount(g.row(w) & xs) <= 1 && std::popcount(g.row(w) & ys) <= 1) a |= bit(w);
  }

  auto no_common_between = [&](int lo, int hi) {
    const Vertex u = walk[static_cast<std::size_t>(lo)];
    const Vertex v = walk[static_cast<std::size_t>(hi)];
    const Mask between = hi - lo > 1 ? walk_range(walk, lo + 1, hi - 1) : 0;
    return (g.row(u) & g.row(v) & between) == 0;
  };
  Mask b1 = 0;
  for (std::size_t m = 0; m + 1 < xi.size(); ++m) {
    if (no_common_between(xi[m], xi[m + 1])) b1 |= bit(walk[static_cast<std::size_t>(xi[m])]);
  }
  Mask b2 = 0;
  for (std::size_t m = 1; m < yj.size(); ++m) {
    if (no_common_between(yj[m - 1], yj[m])) b2 |= bit(walk[static_cast<std::size_t>(yj[m])]);
  }
  // D classes are empty when the corresponding neighbourhood is empty.
  Mask d1 = 0;
  if (!xi.empty()) d1 = walk_range(walk, xi.front(), xi.back()) & ~a & ~b1;
  Mask d2 = 0;
  if (!yj.empty()) d2 = walk_range(walk, yj.front(), yj.back()) & ~a & ~b2;

  s.a = VertexSet(a);
  s.b1 = VertexSet(b1);
  s.b2 = VertexSet(b2);
  s.d1 = VertexSet(d1);
  s.d2 = VertexSet(d2);
  s.has_v_ell = !xi.empty() && !yj.empty() && xi.back() == yj.front();
  if (!yj.empty()) {
    const Vertex first_y = walk[static_cast<std::size_t>(yj.front())];
    s.v_x_candidates = std::popcount((b1 | d1) & g.row(first_y) & ~bit(first_y));
  }
  if (!xi.empty()) {
    const Vertex last_x = walk[static_cast<std::size_t>(xi.back())];
    s.v_y_candidates = std::popcount((b2 | d2) & g.row(last_x) & ~bit(last_x));
  }
  s.has_v_x = s.v_x_candidates > 0;
  s.has_v_y = s.v_y_candidates > 0;
  s.walk = std::move(walk);
  return s;
}

}  // namespace

std::uint64_t phi(const Graph& g, const OuterEmbedding& emb, Edge chord, int k) {
  require_chord(g, emb, chord);
  if (k < 1 || k > g.vertex_count()) throw InvalidArgument("phi: k out of range");
  const auto [ccw, cw] = side_walks(emb, chord.u, chord.v);
  const Mask ends = bit(chord.u) | bit(chord.v);
  const Mask left = mask_of(ccw) & ~ends;
  const Mask right = mask_of(cw) & ~ends;
  std::uint64_t total = 0;
  for_each_induced_path(g, k, [&](std::span<const Vertex> path) {
    Mask m = 0;
    for (Vertex v : path) m |= bit(v);
    if ((m & left) && (m & right)) ++total;
  });
  return total;
}

ChordStats chord_stats(const Graph& g, const OuterEmbedding& emb, Edge chord) {
  require_chord(g, emb, chord);
  auto [ccw, cw] = side_walks(emb, chord.u, chord.v);
  ChordStats st;
  st.x = chord.u;
  st.y = chord.v;
  st.n = g.vertex_count();
  st.inner = side_stats(g, std::move(ccw));
  st.outer = side_stats(g, std::move(cw));
  return st;
}

namespace {

std::uint64_t crossing_by_type_bound(const ChordStats& st) {
  auto u = [](int v) { return static_cast<std::uint64_t>(v); };
  return u(st.s1()) * u(st.q1()) + u(st.t1()) * u(st.p1()) + u(st.s1()) * u(st.t2()) +
         u(st.s2()) * u(st.t1()) + u(st.p1()) * u(st.q2()) + u(st.p2()) * u(st.q1());
}

}  // namespace

bool check_eq1(const Graph& g, const OuterEmbedding& emb, Edge chord) {
  const ChordStats st = chord_stats(g, emb, chord);
  return phi(g, emb, chord, 4) <= crossing_by_type_bound(st);
}

namespace {

std::string describe(std::initializer_list<std::pair<const char*, long long>> values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : values) {
    if (!first) os << ' ';
    os << name << '=' << value;
    first = false;
  }
  return os.str();
}

// Contribution of an interior non-neighbour w of `end` to the P3 count from `end`.
int contribution(const Graph& g, Vertex w, Vertex end, VertexSet end_side) {
  if (g.has_edge(w, end)) return 0;
  return std::popcount(g.row(w) & end_side.mask());
}

void audit_side(const Graph& g, const SideStats& s, const std::string& prefix,
                std::vector<ChordCheck>& out) {
  const auto& walk = s.walk;
  const Vertex x = walk.front();
  const Vertex y = walk.back();
  const std::vector<int> xi = indices_in_walk(walk, s.x_side);
  const std::vector<int> yj = indices_in_walk(walk, s.y_side);

  {
    const bool ok = xi.empty() || yj.empty() || xi.back() <= yj.front();
    out.push_back({prefix + "ordering", ok,
                   describe({{"last_x_index", xi.empty() ? -1 : xi.back()},
                             {"first_y_index", yj.empty() ? -1 : yj.front()}})});
  }
  {
    bool ok = true;
    int worst = 0;
    if (!xi.empty() && !yj.empty() && xi.back() < yj.front()) {
      for (int i = xi.back() + 1; i < yj.front(); ++i) {
        const Vertex w = walk[static_cast<std::size_t>(i)];
        const int cx = contribution(g, w, x, s.x_side);
        const int cy = contribution(g, w, y, s.y_side);
        worst = std::max({worst, cx, cy});
        ok = ok && cx <= 1 && cy <= 1;
      }
    }
    out.push_back({prefix + "gap_single_contribution", ok, describe({{"max_contribution", worst}})});
  }
  {
    bool ok = true;
    int worst = 0;
    auto scan = [&](const std::vector<int>& idx, Vertex end, VertexSet end_side) {
      for (std::size_t m = 0; m + 1 < idx.size(); ++m) {
        int doubles = 0;
        for (int i = idx[m] + 1; i < idx[m + 1]; ++i) {
          if (contribution(g, walk[static_cast<std::size_t>(i)], end, end_side) >= 2) ++doubles;
        }
        worst = std::max(worst, doubles);
        ok = ok && doubles <= 1;
      }
    };
    scan(xi, x, s.x_side);
    scan(yj, y, s.y_side);
    out.push_back({prefix + "gap_double_contribution_unique", ok, describe({{"max_doubles_in_gap", worst}})});
  }
  {
    bool ok = true;
    int offenders = 0;
    const Vertex ell = s.has_v_ell ? walk[static_cast<std::size_t>(xi.back())] : -1;
    for (std::size_t i = 1; i + 1 < walk.size(); ++i) {
      const Vertex w = walk[i];
      const int hits = s.a.contains(w) + s.b1.contains(w) + s.b2.contains(w) + s.d1.contains(w) +
                       s.d2.contains(w);
      const bool good = w == ell ? (hits == 2 && s.d1.contains(w) && s.d2.contains(w)) : hits == 1;
      if (!good) {
        ok = false;
        ++offenders;
      }
    }
    out.push_back({prefix + "partition", ok, describe({{"misplaced", offenders}})});
  }
  {
    const int d1 = s.d1.size();
    const int d2 = s.d2.size();
    const bool ok = (d1 == 0 || d1 % 2 == 1) && (d2 == 0 || d2 % 2 == 1);
    out.push_back({prefix + "d_odd", ok, describe({{"d1", d1}, {"d2", d2}})});
  }
  out.push_back({prefix + "v_x_unique", s.v_x_candidates <= 1, describe({{"candidates", s.v_x_candidates}})});
  out.push_back({prefix + "v_y_unique", s.v_y_candidates <= 1, describe({{"candidates", s.v_y_candidates}})});

  const long long a = s.a.size(), b1 = s.b1.size(), b2 = s.b2.size(), d1 = s.d1.size(), d2 = s.d2.size();
  out.push_back({prefix + "budget", a + b1 + b2 + d1 + d2 <= s.size - 1,
                 describe({{"a", a}, {"b1", b1}, {"b2", b2}, {"d1", d1}, {"d2", d2}, {"side", s.size}})});
  // Halves are compared after doubling both sides.
  out.push_back({prefix + "x_degree", 2LL * s.x_neighbors <= d1 + 1 + 2 * b1,
                 describe({{"x_neighbors", s.x_neighbors}, {"d1", d1}, {"b1", b1}})});
  out.push_back({prefix + "y_degree", 2LL * s.y_neighbors <= d2 + 1 + 2 * b2,
                 describe({{"y_neighbors", s.y_neighbors}, {"d2", d2}, {"b2", b2}})});
  out.push_back({prefix + "x_p3", s.x_p3 <= d1 - 1 + a + 1,
                 describe({{"x_p3", s.x_p3}, {"d1", d1}, {"a", a}})});
  out.push_back({prefix + "y_p3", s.y_p3 <= d2 - 1 + a + 1,
                 describe({{"y_p3", s.y_p3}, {"d2", d2}, {"a", a}})});
}

}  // namespace

std::vector<ChordCheck> audit_chord(const Graph& g, const OuterEmbedding& emb, Edge chord) {
  const ChordStats st = chord_stats(g, emb, chord);
  const std::uint64_t crossing = g.vertex_count() < 4 ? 0 : phi(g, emb, chord, 4);
  std::vector<ChordCheck> out;
  out.push_back({"sides_total", st.n1() + st.n2() == st.n + 2,
                 describe({{"n1", st.n1()}, {"n2", st.n2()}, {"n", st.n}})});
  audit_side(g, st.inner, "inner.", out);
  audit_side(g, st.outer, "outer.", out);
  const std::uint64_t by_type = crossing_by_type_bound(st);
  out.push_back({"crossing_by_type", crossing <= by_type,
                 describe({{"phi", static_cast<long long>(crossing)}, {"bound", static_cast<long long>(by_type)}})});
  const long long quad = static_cast<long long>(st.n1()) * st.n2() + st.n1() + st.n2();
  out.push_back({"crossing_quadratic", static_cast<long long>(crossing) <= quad,
                 describe({{"phi", static_cast<long long>(crossing)}, {"bound", quad}})});
  return out;
}

}  // namespace outerpath
