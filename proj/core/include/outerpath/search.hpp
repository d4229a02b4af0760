#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "outerpath/graph.hpp"

namespace outerpath {

inline constexpr int kTriangulationMaxVertices = 16;
inline constexpr int kSearchMaxVertices = 8;

/// Catalan(m) for m <= 35.
std::uint64_t catalan(int m);

/// Every triangulation of the convex n-gon with outer cycle 0,1,...,n-1, each
/// exactly once, in a fixed deterministic order. 3 <= n <= 16.
void enumerate_triangulations(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> triangulations(int n);
std::uint64_t count_triangulations(int n);

/// Every edge subset of every triangulation of the n-gon (duplicates across
/// triangulations included) or, with dedup, one canonical representative per
/// isomorphism class in canonical-form order. 3 <= n <= 8 with dedup, n <= 16 without.
void enumerate_outerplanar(int n, bool dedup, const std::function<void(const Graph&)>& visit);

/// Triangulation of the n-gon with outer cycle 0..n-1 built from random apex
/// choices. 3 <= n <= 64.
Graph random_triangulation(int n, std::mt19937_64& rng);

/// Random edge subset of a random triangulation under a random relabeling.
Graph random_outerplanar(int n, std::mt19937_64& rng, double edge_probability = 0.6);

/// Worker count used when a caller passes jobs <= 0.
int default_jobs();

struct SearchOptions {
  int jobs = 0;
  bool witnesses = true;
};

struct SearchReport {
  int n = 0;
  int k = 0;
  std::uint64_t max_copies = 0;
  std::vector<std::string> witnesses;  // sorted graph6 canonical forms
  std::uint64_t graphs_scanned = 0;
  std::uint64_t triangulations = 0;
  double elapsed_seconds = 0.0;
};

/// Maximum number of induced P_k over all outerplanar graphs on n vertices.
/// 3 <= n <= 8, 1 <= k <= n. The report is identical for every worker count
/// apart from elapsed_seconds.
SearchReport extremal_value(int n, int k, const SearchOptions& options = {});

/// Largest endpoint-pair count of induced paths per vertex count, over every
/// outerplanar graph on n vertices: max_pair_count[len] for len in 2..max_len.
struct EndpointScan {
  int n = 0;
  int max_len = 0;
  std::vector<std::uint64_t> max_pair_count;
  std::uint64_t graphs_scanned = 0;
};
EndpointScan scan_endpoint_counts(int n, int max_len, int jobs = 0);

/// (a) every endpoint pair of every outerplanar graph on n vertices has at most
/// fib(k+1) induced P_{k+1} between them, and (b) the extremal number of
/// induced P_{k+1} is at most fib(k+1) C(n,2). n <= 8, k >= 1, k+1 <= n.
bool verify_fib_bounds(int n, int k, int jobs = 0);

/// Every 2-connected outerplanar graph on n vertices with the identity outer
/// cycle, i.e. the chord subsets of every triangulation (labeled, duplicates removed).
std::vector<Graph> two_connected_outerplanar(int n);

}  // namespace outerpath
