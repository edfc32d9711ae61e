#pragma once

#include "geometry.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kpoly {

struct OverlapError : std::runtime_error {
  explicit OverlapError(const std::string& what) : std::runtime_error(what) {}
};
struct WrongSizeError : std::invalid_argument {
  explicit WrongSizeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Total-order key for an isomorphism class: equal codes exactly for
/// configurations related by translation, rotation by a multiple of pi/k, or
/// reflection. Layout: [n, then per cell in BFS order: degree followed by
/// (transformed slot, BFS index of neighbor) pairs sorted by slot].
using Code = std::vector<int32_t>;

/// The minimizing choice behind a canonical code, together with the BFS
/// renumbering it induces (order[bfs index] = original cell index).
struct CodeWitness {
  int start = 0;
  int rot = 0;
  bool refl = false;
  std::vector<int> order;
};

/// Isometry of the direction system: z -> zeta^rot * c(z + pre), with c the
/// identity or complex conjugation. Cell parities shift by rot.
struct Isometry {
  int rot = 0;
  bool refl = false;
  CycNum pre;

  CellPlacement apply(int k, const CellPlacement& c) const;
  int map_slot(int k, int d) const;
  Isometry inverse(int k) const;
};

/// Isometry that carries the given placements onto the code frame of the
/// witness produced by canonical_code_of.
Isometry witness_isometry(int k, const std::vector<CellPlacement>& cells,
                          const CodeWitness& w);

/// Canonical code of an arbitrary connected placement set with adjacency
/// matrix adj (n*n entries, slot+1 or 0). Minimizes over start cell, 2k
/// rotations and reflection; see Code for the layout.
Code canonical_code_of(int k, const std::vector<CellPlacement>& cells,
                       const std::vector<uint8_t>& adj, CodeWitness* w = nullptr);

enum class GraphClass4 { Star, StarPlusEdge, StarPlusTwoEdges, Path, Cycle };

/// An edge-to-edge connected, interior-disjoint set of regular k-gons with
/// its full adjacency matrix. Cell 0 is the root at the origin with parity 0.
class KPolyomino {
 public:
  /// Grows a polyomino from the root by the given (parent index, slot) steps.
  /// Every new cell is checked against all existing cells; the adjacency
  /// matrix includes coincidental adjacencies outside the growth tree.
  static KPolyomino build(int k, std::span<const std::pair<int, int>> steps);

  /// Normalizes (translate cell 0 to the origin, rotate by pi/k if its parity
  /// is 1), validates all pairs and computes the adjacency matrix.
  static KPolyomino from_placements(int k, std::vector<CellPlacement> cells);

  /// Rebuilds the canonical representative encoded by a code. The result is a
  /// pure function of the code, which keeps enumeration output independent of
  /// generation order.
  static KPolyomino from_code(int k, const Code& code);

  /// Trusts the caller: cells already validated, adj already correct.
  static KPolyomino assemble(int k, std::vector<CellPlacement> cells,
                             std::vector<uint8_t> adj);

  int k() const { return k_; }
  int size() const { return static_cast<int>(cells_.size()); }
  const std::vector<CellPlacement>& cells() const { return cells_; }
  const std::vector<uint8_t>& adj() const { return adj_; }

  /// slot+1 if cell j is edge-adjacent to cell i across slot, else 0.
  int adjacency(int i, int j) const {
    return adj_[static_cast<size_t>(i) * cells_.size() + static_cast<size_t>(j)];
  }
  int degree(int i) const;
  bool slot_used(int i, int d) const;
  int adjacent_pairs() const;

  Code canonical_code(CodeWitness* w = nullptr) const;

  /// Number of edges of the union: k*n minus one per shared edge.
  long edge_count() const;

  GraphClass4 graph_class4() const;

  bool removal_keeps_connected(int cell) const;

  /// Full audit: pairwise classification, adjacency recomputation, root
  /// placement, connectivity and the degree bound. Throws on any violation.
  void validate() const;

 private:
  int k_ = 0;
  std::vector<CellPlacement> cells_;
  std::vector<uint8_t> adj_;
};

}  // namespace kpoly
