#pragma once

#include <vector>

#include "cycleprefix/topology.hpp"
#include "cycleprefix/walk.hpp"

namespace cycleprefix {

/// Split of `target` into its shortest header and longest tail relative to
/// `source`. The tail is a suffix of target that is a subsequence of source
/// with every source symbol up to the last matched one occurring in target.
struct HeaderSplit {
  Vertex target;
  int header_len = 0;
  std::vector<Symbol> header;
  std::vector<Symbol> tail;
};

HeaderSplit header_split(const Vertex& source, const Vertex& target);

/// Distance in Gamma_delta(D); requires r = 0.
int distance(const Vertex& x, const Vertex& y, const NetworkParams& params);

/// The unique shortest path in Gamma_delta(D): compose the header symbols
/// from last to first. Throws SameVertex when x = y.
Path shortest_path(const Vertex& x, const Vertex& y, const NetworkParams& params);

/// distance(i o x, y); r = 0 and x != y.
int next_hop_distance_check(const Vertex& x, const Vertex& y, Symbol i, const NetworkParams& params);

/// Path of length at most D + r in Gamma_delta(D, -r), delta >= D >= 2r + 2.
Path restricted_route(const Vertex& x, const Vertex& y, const NetworkParams& params);

/// Walk of length exactly D + r in Gamma_delta(D, -r), delta >= D >= 2r + 3.
/// x = y is allowed.
Walk reach_walk(const Vertex& x, const Vertex& y, const NetworkParams& params);

/// x_{D-1} = 1, x_D = D and some earlier symbol exceeds D.
bool is_remote(const Vertex& x, const NetworkParams& params);

struct RemoteWitness {
  Vertex vertex;
  int distance = 0;  // BFS distance from the standard origin
  bool ok = false;   // distance == D + r
};

/// The remote vertex (D+1) 2 3 ... (D-2) 1 D together with its BFS distance
/// from the standard origin in Gamma_delta(D, -r).
RemoteWitness remote_distance_witness(const NetworkParams& params);

}  // namespace cycleprefix
