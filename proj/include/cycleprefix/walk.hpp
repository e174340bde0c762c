#pragma once

#include <vector>

#include "cycleprefix/topology.hpp"

namespace cycleprefix {

/// A vertex sequence whose consecutive pairs are arcs. Repeats are allowed;
/// a walk with pairwise distinct vertices is a path.
struct Walk {
  std::vector<Vertex> vertices;

  int length() const noexcept { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  const Vertex& source() const { return vertices.front(); }
  const Vertex& target() const { return vertices.back(); }
  bool has_distinct_vertices() const;

  friend bool operator==(const Walk&, const Walk&) = default;
};

using Path = Walk;

/// Every consecutive pair is an arc of Gamma_delta(D, -r).
bool is_valid_walk(const Walk& walk, const NetworkParams& params);
/// Arc labels along the walk; throws DomainError on a non-arc.
std::vector<ArcOp> hop_operations(const Walk& walk, const NetworkParams& params);

Walk relabel(const Walk& walk, const Relabeling& sigma);

/// Internally vertex-disjoint src -> dst paths.
struct Container {
  Vertex src;
  Vertex dst;
  std::vector<Path> paths;

  /// Maximum path length.
  int length() const;
};

Container relabel(const Container& c, const Relabeling& sigma);

}  // namespace cycleprefix
