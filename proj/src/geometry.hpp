#pragma once

#include "cyclotomic.hpp"

#include <optional>
#include <vector>

namespace kpoly {

struct BadSlotError : std::invalid_argument {
  explicit BadSlotError(const std::string& what) : std::invalid_argument(what) {}
};
struct KMismatchError : std::invalid_argument {
  KMismatchError() : std::invalid_argument("cells built for different k") {}
};

/// One regular k-gon: exact center plus the orientation class. Edge normals
/// point along slots d in [0, 2k) with d == parity (mod 2). The neighbor
/// across slot d sits at center + zeta^d with parity (parity + k) mod 2.
/// Centers are measured in lattice steps (adjacent centers are 1 apart, so
/// the apothem is 1/2 and the circumradius is 1/(2 cos(pi/k))).
struct CellPlacement {
  CycNum center;
  int parity = 0;
};

enum class PairKind { Identical, Overlapping, EdgeAdjacent, Touching, Disjoint };

struct PairClass {
  PairKind kind;
  int slot = -1;  // set for EdgeAdjacent: normal slot of the first cell
};

/// The edge-adjacent cell across normal slot d.
CellPlacement neighbor_placement(int k, const CellPlacement& c, int d);

/// Turn angle at the middle of a 3-chain, in units of 2pi/k, folded to the
/// smaller side: min(|d1-d2|, 2k-|d1-d2|)/2. Requires d1 != d2 of equal
/// parity; the result lies in [1, floor(k/2)].
int discrete_angle(int k, int d1, int d2);

/// Three cells chained edge-to-edge do not overlap iff the turn angle is at
/// least floor((k+5)/6).
bool chain3_admissible(int k, int delta);

/// At the minimal admissible turn angle the two end cells of a 3-chain share
/// a full edge exactly when k is a multiple of 6.
bool chain3_touching(int k);

/// End cells of a same-side 4-chain do not overlap iff the two turn angles
/// sum to at least floor((k+1)/2).
bool chain4_admissible(int k, int delta1, int delta2);

/// The same-side 4-chain closes into a 4-cycle iff k is even and the turn
/// angles sum to exactly k/2.
bool chain4_closes_cycle(int k, int delta1, int delta2);

/// The k vertices of a cell, each premultiplied by the positive factor
/// 2cos(pi/k) so that they are ring elements: vertex at slot v equals
/// 2cos(pi/k)*center + zeta^v for the k slots v == parity+1 (mod 2),
/// in increasing slot order.
std::vector<CycNum> vertices(int k, const CellPlacement& c);

/// Exact classification of a pair of cells. Boundary contact without a full
/// shared edge is Touching; "overlapping" means the open interiors meet.
PairClass classify_pair(int k, const CellPlacement& a, const CellPlacement& b);

namespace detail {

/// Cached numeric data for a placement, reused across many pair tests.
struct PlacementNum {
  std::complex<double> z;
  double sum_abs = 0;  // upper bound on the coefficient 1-norm of the center
};
PlacementNum placement_num(const CellPlacement& c);

/// Validation-grade relation: distinguishes Overlapping/Identical from
/// everything else and reports full-edge adjacency, but does not separate
/// Touching from Disjoint (callers that need that use classify_pair).
struct PairRelation {
  bool overlapping = false;  // includes Identical
  bool adjacent = false;
  int slot = -1;
};
PairRelation pair_relation(int k, const CellPlacement& a, const PlacementNum& an,
                           const CellPlacement& b, const PlacementNum& bn);

}  // namespace detail

}  // namespace kpoly
