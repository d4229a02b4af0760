#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "outerpath/graph.hpp"
#include "outerpath/outerplanarity.hpp"

namespace outerpath {

enum class ConstructionKind { star, cycle, cycle_pendant, c6_chord, g_t, g_t_prime, double_star };

std::string_view to_string(ConstructionKind kind);
/// Throws InvalidArgument for unknown names.
ConstructionKind parse_construction_kind(std::string_view name);

/// Parameters per kind:
///   star(n >= 2)           K_{1,n-1}, centre 0
///   cycle(n >= 3)          C_n
///   cycle_pendant(n >= 4)  C_{n-1} on 0..n-2 plus leaf n-1 on vertex 0
///   c6_chord               C_6 plus the chord 0-3 (n must be 0 or 6)
///   g_t(t >= 2)            path x_1..x_t plus a new common neighbour for every
///                          pair at distance two; 2t-2 vertices
///   g_t_prime(t >= 2, n >= 2t)
///                          g_t plus floor((n-2t+2)/2) leaves on each of x_1 and
///                          x_t; an odd remainder leaf also goes to x_1
///   double_star(n >= 4)    g_t_prime with t = 2
struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::star;
  int n = 0;
  int t = 0;
};

struct Construction {
  Graph graph;
  OuterEmbedding embedding;
};

/// Vertex layout of g_t and g_t_prime: x_i is vertex i-1, y_{i,i+2} is vertex
/// t+i-1, leaves follow.
Construction build(const ConstructionSpec& spec);

/// fib(1) = fib(2) = 1. Throws InvalidArgument for t < 1 or overflow (t > 93).
std::uint64_t fib(int t);

/// Induced P_t in g_t running from x_1 to x_t, by enumeration.
std::uint64_t h_count(int t);

/// Exact p/q with q > 0 and gcd(p, q) = 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::int64_t floor() const;
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// value <= r, exactly.
bool leq(std::uint64_t value, const Rational& r);
bool leq(const Rational& r, std::uint64_t value);

/// fib(k-1) (n-2k+3)^2 / 4. Requires k >= 2 and n >= 2k.
Rational lower_bound_value(int k, int n);

std::uint64_t binomial(int n, int r);

}  // namespace outerpath
