#pragma once

#include <vector>

#include "cycleprefix/topology.hpp"
#include "cycleprefix/walk.hpp"

namespace cycleprefix {

// Everything in this header works in Gamma_delta(D) (r = 0) with the
// destination Y fixed at the standard origin 12...D unless a function takes an
// explicit destination. M(Y) is indexed as Y_2..Y_{delta+1}:
//   Y_j = 2 3 .. j 1 (j+1) .. D   for 2 <= j <= D,
//   Y_j = 2 3 .. D j              for D < j <= delta + 1.

/// First symbol of x outside {k+1, ..., D+1}. Throws UndefinedAlpha.
Symbol alpha(const Vertex& x, int k);

/// min(D + 2, smallest s > k that sits to the right of i in x or is absent
/// from x).
int beta(const Vertex& x, Symbol i, int k);

struct CharTriple {
  Symbol alpha;
  int beta;   // beta(v, alpha(v))
  int beta1;  // beta(v, 1)

  friend auto operator<=>(const CharTriple&, const CharTriple&) = default;
};

/// Characteristic statistics of v relative to the standard origin; v must
/// differ from the origin.
CharTriple char_triple(const Vertex& v, const NetworkParams& params);

enum class SourceCase {
  LeadsWithOne,     // x_1 = 1
  LeadsPastHeader,  // x_1 = k + 1
  General,
};

/// Case of x relative to the origin, after large-symbol normalisation.
SourceCase source_case(const Vertex& x, const NetworkParams& params);

/// Alphabet permutation fixing 1..D that renames the symbols of x above D to
/// D+1, D+2, ... in order of appearance.
Relabeling large_symbol_normalizer(const Vertex& x, const NetworkParams& params);

/// j such that theta(i o x) = Y_j. Requires i != x_1 and i o x != origin.
int theta(const Vertex& x, Symbol i, const NetworkParams& params);

/// Predicted d(i o x, Y_theta) from the closed-form case tables.
int leg_distance(const Vertex& x, Symbol i, const NetworkParams& params);

/// Y_j for the standard origin.
Vertex origin_in_neighbor(int j, const NetworkParams& params);

/// delta internally disjoint x -> y paths: x -> Z -> (shortest path) ->
/// theta(Z) -> y for every out-neighbour Z != y, plus the arc x -> y when
/// it exists.
Container container(const Vertex& x, const Vertex& y, const NetworkParams& params);

struct WitnessLeg {
  Symbol i;
  Vertex start;  // i o X*
  int distance;  // d(i o X*, Y)
  bool through_bottleneck;
};

struct LowerBoundWitness {
  Vertex source;      // X* = (delta+1) delta ... (delta-D+2)
  Vertex target;      // origin
  Vertex bottleneck;  // 2 3 ... D (delta+1)
  std::vector<WitnessLeg> legs;  // i = 2..D
  bool ok = false;    // every 1 < i < D has distance D and routes through the bottleneck
};

LowerBoundWitness lower_bound_witness(const NetworkParams& params);

}  // namespace cycleprefix
