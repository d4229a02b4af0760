#include <algorithm>
#include <cstddef>
#include <string>

#include "outerpath/errors.hpp"
#include "outerpath/graph.hpp"

namespace outerpath {

namespace {

constexpr int kBias = 63;
constexpr char kLongOrder = 126;

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(kLongOrder);
    out.push_back(static_cast<char>(((n >> 12) & 0x3F) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3F) + kBias));
    out.push_back(static_cast<char>((n & 0x3F) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!printable(text[i])) throw ParseError("graph6: byte outside 63..126", i);
  }
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != kLongOrder) {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated long order header", text.size());
    if (text[1] == kLongOrder) throw ParseError("graph6: orders above 258047 unsupported", 1);
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    pos = 4;
  }
  if (n == 0) throw ParseError("graph6: graph has no vertices", 0);
  if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds 64", 0);

  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes, got " +
                         std::to_string(text.size()),
                     std::min(text.size(), expected));
  }

  Graph g(static_cast<int>(n));
  long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + static_cast<std::size_t>(k / 6)] - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    if (last & ((1 << (6 - bits % 6)) - 1)) {
      throw ParseError("graph6: nonzero padding bits", text.size() - 1);
    }
  }
  return g;
}

}  // namespace outerpath
