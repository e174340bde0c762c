#pragma once

// Brute-force ground truth over an explicitly materialised digraph. Nothing
// here calls into the constructive routing or container code.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cycleprefix/topology.hpp"
#include "cycleprefix/walk.hpp"

namespace cycleprefix::oracle {

inline constexpr std::uint64_t kDefaultVertexCap = 1'000'000;
inline constexpr int kUnreachable = -1;

/// Rank of x among the D-permutations of 1..delta+1 in lexicographic order.
std::uint64_t lex_rank(const Vertex& x, const NetworkParams& params);
Vertex lex_unrank(std::uint64_t rank, const NetworkParams& params);

/// Runs fn(i) for i in [0, n) on a pool of worker threads. fn must only write
/// to slots owned by i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Gamma_delta(D, -r) with vertices indexed by lexicographic rank and
/// adjacency in flat arrays.
class ExplicitGraph {
 public:
  explicit ExplicitGraph(const NetworkParams& params, std::uint64_t cap = kDefaultVertexCap);

  const NetworkParams& params() const noexcept { return params_; }
  std::uint32_t size() const noexcept { return n_; }
  std::uint32_t index_of(const Vertex& x) const { return static_cast<std::uint32_t>(lex_rank(x, params_)); }
  Vertex vertex(std::uint32_t u) const;

  std::span<const std::uint32_t> out(std::uint32_t u) const;
  std::span<const std::uint32_t> in(std::uint32_t u) const;

  /// Directed distances from `source`; kUnreachable where there is no path.
  std::vector<int> bfs(std::uint32_t source) const;
  /// Number of shortest paths from the BFS source to every vertex (saturating).
  std::vector<std::uint64_t> geodesic_counts(std::uint32_t source, std::span<const int> dist) const;
  /// Maximum number of internally vertex-disjoint u -> v paths (unit vertex
  /// capacities via vertex splitting).
  int max_disjoint_paths(std::uint32_t u, std::uint32_t v) const;

 private:
  NetworkParams params_;
  std::uint32_t n_ = 0;
  int degree_ = 0;
  std::vector<Symbol> symbols_;
  std::vector<std::uint32_t> out_;
  std::vector<std::uint32_t> in_offsets_;
  std::vector<std::uint32_t> in_;
};

struct DistanceTable {
  NetworkParams params;
  Vertex source;
  std::vector<int> dist;  // indexed by lex_rank

  int at(const Vertex& v) const { return dist.at(static_cast<std::size_t>(lex_rank(v, params))); }
  int eccentricity() const;
};

DistanceTable bfs_distances(const Vertex& source, const NetworkParams& params,
                            std::uint64_t cap = kDefaultVertexCap);

/// Maximum eccentricity. Computed from the standard origin and cross-checked
/// on three further sources (vertex symmetry).
int diameter(const NetworkParams& params, std::uint64_t cap = kDefaultVertexCap);
int diameter(const ExplicitGraph& graph);

std::uint64_t count_geodesics(const Vertex& x, const Vertex& y, const NetworkParams& params,
                              std::uint64_t cap = kDefaultVertexCap);
/// All shortest x -> y paths, in lexicographic order of their vertex sequences.
std::vector<Path> enumerate_geodesics(const Vertex& x, const Vertex& y, const NetworkParams& params,
                                      std::uint64_t cap = kDefaultVertexCap, std::size_t limit = 1000);
std::vector<Path> enumerate_geodesics(const ExplicitGraph& graph, std::uint32_t x, std::uint32_t y,
                                      std::size_t limit = 1000);

struct ReachabilityReport {
  NetworkParams params;
  int k;
  bool all_pairs_reachable_in_exactly_k;
  std::vector<std::pair<Vertex, Vertex>> counterexamples;  // truncated
};

/// Walks of length exactly k between every ordered pair (u = v included),
/// by k-fold boolean composition of the adjacency relation.
ReachabilityReport exact_k_reachable(const NetworkParams& params, int k, std::uint64_t cap = kDefaultVertexCap,
                                     std::size_t max_counterexamples = 16);
ReachabilityReport exact_k_reachable(const ExplicitGraph& graph, int k, std::size_t max_counterexamples = 16);
/// Smallest k <= k_max for which the digraph is k-reachable.
std::optional<int> min_exact_reach_k(const ExplicitGraph& graph, int k_max);

struct ContainerDiagnostics {
  bool valid = false;
  int length = 0;
  int width = 0;
  std::vector<std::string> problems;
  std::optional<Vertex> shared_vertex;
};

/// Arc validity, endpoints, distinctness within each path, internal
/// disjointness across paths and width = delta - r.
ContainerDiagnostics verify_container(const Container& c, const NetworkParams& params);

/// Menger count; 0 for x = y.
int menger_disjoint_count(const Vertex& x, const Vertex& y, const NetworkParams& params,
                          std::uint64_t cap = kDefaultVertexCap);

}  // namespace cycleprefix::oracle
