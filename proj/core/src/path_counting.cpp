#include "outerpath/path_counting.hpp"

#include <algorithm>

#include "outerpath/errors.hpp"

namespace outerpath {

namespace {

std::uint64_t count_from(const Graph& g, Vertex first, Vertex last, int len, int k, Mask forbidden) {
  const Mask candidates = g.row(last) & ~forbidden;
  if (len + 1 == k) return static_cast<std::uint64_t>(std::popcount(candidates & ~low_bits(first + 1)));
  const Mask next_forbidden = forbidden | g.row(last) | bit(last);
  std::uint64_t total = 0;
  for (Mask m = candidates; m != 0; m &= m - 1) {
    total += count_from(g, first, std::countr_zero(m), len + 1, k, next_forbidden);
  }
  return total;
}

std::uint64_t count_to(const Graph& g, Vertex target, Vertex last, int len, int k, Mask forbidden) {
  const Mask candidates = g.row(last) & ~forbidden;
  if (len + 1 == k) return (candidates & bit(target)) ? 1 : 0;
  const Mask next_forbidden = forbidden | g.row(last) | bit(last);
  // Interior vertices may not touch the target unless they are next to last.
  const Mask interior = len + 2 == k ? candidates & ~bit(target)
                                     : candidates & ~bit(target) & ~g.row(target);
  std::uint64_t total = 0;
  for (Mask m = interior; m != 0; m &= m - 1) {
    total += count_to(g, target, std::countr_zero(m), len + 1, k, next_forbidden);
  }
  return total;
}

void check_k(const Graph& g, int k, int lowest) {
  if (k < lowest || k > g.vertex_count()) {
    throw InvalidArgument("path length k=" + std::to_string(k) + " outside " + std::to_string(lowest) +
                          ".." + std::to_string(g.vertex_count()));
  }
}

}  // namespace

PathCount count_induced_paths(const Graph& g, int k) {
  check_k(g, k, 1);
  if (k == 1) return {k, static_cast<std::uint64_t>(g.vertex_count())};
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) total += count_from(g, v, v, 1, k, bit(v));
  return {k, total};
}

std::uint64_t count_induced_p3_closed_form(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Mask nb = g.row(v);
    const std::uint64_t d = static_cast<std::uint64_t>(std::popcount(nb));
    std::uint64_t inside = 0;
    for (Mask m = nb; m != 0; m &= m - 1) inside += static_cast<std::uint64_t>(std::popcount(g.row(std::countr_zero(m)) & nb));
    total += (d > 1 ? d * (d - 1) / 2 : 0) - inside / 2;
  }
  return total;
}

std::uint64_t count_induced_paths_between(const Graph& g, Vertex x, Vertex y, int k) {
  const int n = g.vertex_count();
  if (x < 0 || y < 0 || x >= n || y >= n || x == y) {
    throw InvalidArgument("count_induced_paths_between: endpoints must be distinct vertices");
  }
  check_k(g, k, 2);
  return count_to(g, y, x, 1, k, bit(x));
}

EndpointCensus::EndpointCensus(const Graph& g, int max_len)
    : n_(g.vertex_count()), max_len_(std::min(max_len, g.vertex_count())) {
  if (max_len < 2) throw InvalidArgument("EndpointCensus: max_len must be at least 2");
  const std::size_t stride = static_cast<std::size_t>(max_len_ + 1);
  counts_.assign(static_cast<std::size_t>(n_ * n_) * stride, 0);
  std::array<Vertex, kMaxVertices> path{};
  auto walk = [&](auto&& self, int len, Mask forbidden) -> void {
    const Vertex last = path[static_cast<std::size_t>(len - 1)];
    const Mask next_forbidden = forbidden | g.row(last) | bit(last);
    for (Mask m = g.row(last) & ~forbidden; m != 0; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      path[static_cast<std::size_t>(len)] = w;
      if (w > path[0]) {
        ++counts_[(static_cast<std::size_t>(path[0] * n_ + w)) * stride + static_cast<std::size_t>(len + 1)];
      }
      if (len + 1 < max_len_) self(self, len + 1, next_forbidden);
    }
  };
  for (Vertex v = 0; v < n_; ++v) {
    path[0] = v;
    walk(walk, 1, bit(v));
  }
}

std::uint64_t EndpointCensus::count(Vertex x, Vertex y, int len) const {
  if (x > y) std::swap(x, y);
  if (len < 2 || len > max_len_ || x == y) return 0;
  return counts_[static_cast<std::size_t>(x * n_ + y) * static_cast<std::size_t>(max_len_ + 1) +
                 static_cast<std::size_t>(len)];
}

std::uint64_t EndpointCensus::max_for_length(int len) const {
  std::uint64_t best = 0;
  for (Vertex x = 0; x < n_; ++x) {
    for (Vertex y = x + 1; y < n_; ++y) best = std::max(best, count(x, y, len));
  }
  return best;
}

}  // namespace outerpath
