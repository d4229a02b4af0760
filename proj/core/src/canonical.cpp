#include <array>
#include <cstdint>

#include "outerpath/errors.hpp"
#include "outerpath/graph.hpp"

namespace outerpath {

namespace {

// Branch-and-bound over vertex orderings. Position j fixes column j of the
// column-major upper triangle, so columns are compared as soon as they exist.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        // Swapping twins is an automorphism, so only one of them needs trying per level.
        twins_[static_cast<std::size_t>(u)] |=
            (u != v && (g.row(u) & ~bit(v)) == (g.row(v) & ~bit(u))) ? bit(v) : 0;
      }
    }
  }

  std::array<Vertex, kCanonicalMaxVertices> run() {
    search(0, 0, true);
    return best_order_;
  }

 private:
  void search(int j, Mask placed, bool less) {
    if (j == n_) {
      if (less) {
        best_ = cur_;
        best_order_ = order_;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    Mask tried = 0;
    for (Mask cand = low_bits(n_) & ~placed; cand != 0; cand &= cand - 1) {
      const Vertex v = std::countr_zero(cand);
      if (twins_[static_cast<std::size_t>(v)] & tried) continue;
      tried |= bit(v);

      std::uint32_t col = 0;
      for (int i = 0; i < j; ++i) {
        col = (col << 1) | (g_.has_edge(order_[static_cast<std::size_t>(i)], v) ? 1U : 0U);
      }
      bool child_less = less || !have_best_;
      if (!child_less) {
        if (col > best_[static_cast<std::size_t>(j)]) continue;
        if (col < best_[static_cast<std::size_t>(j)]) child_less = true;
      }
      cur_[static_cast<std::size_t>(j)] = col;
      order_[static_cast<std::size_t>(j)] = v;
      const std::uint64_t before = version_;
      search(j + 1, placed | bit(v), child_less);
      // A new best found below shares our prefix, so we are no longer ahead of it.
      if (version_ != before) less = false;
    }
  }

  const Graph& g_;
  int n_;
  std::array<Mask, kCanonicalMaxVertices> twins_{};
  std::array<Vertex, kCanonicalMaxVertices> order_{};
  std::array<Vertex, kCanonicalMaxVertices> best_order_{};
  std::array<std::uint32_t, kCanonicalMaxVertices> cur_{};
  std::array<std::uint32_t, kCanonicalMaxVertices> best_{};
  bool have_best_ = false;
  std::uint64_t version_ = 0;
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kCanonicalMaxVertices) {
    throw UnsupportedSize("canonical_form supports n <= 9, got " + std::to_string(n));
  }
  const auto order = CanonicalSearch(g).run();
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) perm[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] = j;
  return g.relabeled(perm);
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

}  // namespace outerpath
