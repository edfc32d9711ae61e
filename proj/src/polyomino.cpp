#include "polyomino.hpp"

#include "formulas.hpp"

#include <algorithm>
#include <array>

namespace kpoly {

using detail::PlacementNum;

CellPlacement Isometry::apply(int k, const CellPlacement& c) const {
  CycNum z = c.center + pre;
  if (refl) z = z.conj();
  return {z.shifted(rot), (c.parity + rot) & 1};
}

int Isometry::map_slot(int k, int d) const {
  int t = refl ? rot - d : rot + d;
  t %= 2 * k;
  if (t < 0) t += 2 * k;
  return t;
}

Isometry Isometry::inverse(int k) const {
  Isometry inv;
  inv.refl = refl;
  if (!refl) {
    inv.rot = (2 * k - rot % (2 * k)) % (2 * k);
    inv.pre = -pre.shifted(rot);
  } else {
    inv.rot = rot;
    inv.pre = (-pre.shifted(-rot)).conj();
  }
  return inv;
}

Isometry witness_isometry(int k, const std::vector<CellPlacement>& cells,
                          const CodeWitness& w) {
  Isometry iso;
  iso.rot = w.rot;
  iso.refl = w.refl;
  iso.pre = -cells[static_cast<size_t>(w.start)].center;
  return iso;
}

namespace {

struct NeighborList {
  // (slot, cell) sorted by slot
  std::vector<std::pair<int, int>> nb;
};

std::vector<NeighborList> neighbor_lists(int n, const std::vector<uint8_t>& adj) {
  std::vector<NeighborList> lists(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int v = adj[static_cast<size_t>(i) * n + j];
      if (v != 0) lists[i].nb.emplace_back(v - 1, j);
    }
    std::sort(lists[i].nb.begin(), lists[i].nb.end());
  }
  return lists;
}

}  // namespace

Code canonical_code_of(int k, const std::vector<CellPlacement>& cells,
                       const std::vector<uint8_t>& adj, CodeWitness* w) {
  const int n = static_cast<int>(cells.size());
  const int two_k = 2 * k;
  auto lists = neighbor_lists(n, adj);

  std::vector<int32_t> best, cur;
  CodeWitness best_w;
  bool have_best = false;

  std::vector<int> idx(static_cast<size_t>(n));
  std::vector<int> order(static_cast<size_t>(n));
  std::vector<std::pair<int, int>> tnb;
  tnb.reserve(8);

  for (int s = 0; s < n; ++s) {
    for (int f = 0; f < 2; ++f) {
      for (int r = 0; r < two_k; ++r) {
        std::fill(idx.begin(), idx.end(), -1);
        idx[static_cast<size_t>(s)] = 0;
        order[0] = s;
        int cnt = 1;
        cur.clear();
        size_t pos = 0;
        int state = have_best ? 0 : 1;  // 0 tracking best, 1 strictly better
        bool worse = false;

        auto emit = [&](int32_t v) {
          if (state == 0) {
            int32_t bv = best[pos];
            if (v > bv) {
              worse = true;
              return;
            }
            if (v < bv) state = 1;
          }
          cur.push_back(v);
          ++pos;
        };

        for (int oi = 0; oi < cnt && !worse; ++oi) {
          int u = order[static_cast<size_t>(oi)];
          tnb.clear();
          for (auto [d, j] : lists[static_cast<size_t>(u)].nb) {
            int t = f ? (two_k - d + r) : (d + r);
            t %= two_k;
            tnb.emplace_back(t, j);
          }
          std::sort(tnb.begin(), tnb.end());
          emit(static_cast<int32_t>(tnb.size()));
          for (auto [t, j] : tnb) {
            if (worse) break;
            if (idx[static_cast<size_t>(j)] < 0) {
              idx[static_cast<size_t>(j)] = cnt;
              order[static_cast<size_t>(cnt)] = j;
              ++cnt;
            }
            emit(t);
            emit(idx[static_cast<size_t>(j)]);
          }
        }
        if (worse) continue;
        if (!have_best || state == 1) {
          best = cur;
          best_w.start = s;
          best_w.rot = r;
          best_w.refl = (f == 1);
          best_w.order.assign(order.begin(), order.end());
          have_best = true;
        }
      }
    }
  }

  Code code;
  code.reserve(best.size() + 1);
  code.push_back(n);
  code.insert(code.end(), best.begin(), best.end());
  if (w) *w = best_w;
  return code;
}

KPolyomino KPolyomino::assemble(int k, std::vector<CellPlacement> cells,
                                std::vector<uint8_t> adj) {
  KPolyomino p;
  p.k_ = k;
  p.cells_ = std::move(cells);
  p.adj_ = std::move(adj);
  return p;
}

KPolyomino KPolyomino::build(int k, std::span<const std::pair<int, int>> steps) {
  if (k < 3) throw std::invalid_argument("k must be >= 3");
  std::vector<CellPlacement> cells;
  cells.push_back({CycNum(k), 0});
  std::vector<PlacementNum> nums{detail::placement_num(cells[0])};
  const int n = static_cast<int>(steps.size()) + 1;
  std::vector<uint8_t> adj(static_cast<size_t>(n) * n, 0);

  for (auto [parent, slot] : steps) {
    int cur = static_cast<int>(cells.size());
    if (parent < 0 || parent >= cur)
      throw std::invalid_argument("step parent out of range");
    CellPlacement e = neighbor_placement(k, cells[static_cast<size_t>(parent)], slot);
    PlacementNum en = detail::placement_num(e);
    for (int j = 0; j < cur; ++j) {
      auto rel = detail::pair_relation(k, cells[static_cast<size_t>(j)], nums[static_cast<size_t>(j)], e, en);
      if (rel.overlapping)
        throw OverlapError("placement overlaps an existing cell");
      if (rel.adjacent) {
        adj[static_cast<size_t>(j) * n + cur] = static_cast<uint8_t>(rel.slot + 1);
        adj[static_cast<size_t>(cur) * n + j] =
            static_cast<uint8_t>((rel.slot + k) % (2 * k) + 1);
      }
    }
    cells.push_back(std::move(e));
    nums.push_back(en);
  }
  return assemble(k, std::move(cells), std::move(adj));
}

KPolyomino KPolyomino::from_placements(int k, std::vector<CellPlacement> cells) {
  if (k < 3) throw std::invalid_argument("k must be >= 3");
  if (cells.empty()) throw std::invalid_argument("no cells");
  // Normalize: root at the origin with parity 0 (rotating by pi/k swaps the
  // parity classes, so a parity-1 root can always be fixed up).
  CycNum shift0 = cells[0].center;
  for (auto& c : cells) c.center -= shift0;
  if (cells[0].parity == 1) {
    for (auto& c : cells) {
      c.center = c.center.shifted(1);
      c.parity ^= 1;
    }
  }
  const int n = static_cast<int>(cells.size());
  std::vector<uint8_t> adj(static_cast<size_t>(n) * n, 0);
  std::vector<PlacementNum> nums;
  nums.reserve(cells.size());
  for (const auto& c : cells) nums.push_back(detail::placement_num(c));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto rel = detail::pair_relation(k, cells[static_cast<size_t>(i)], nums[static_cast<size_t>(i)],
                                       cells[static_cast<size_t>(j)], nums[static_cast<size_t>(j)]);
      if (rel.overlapping) throw OverlapError("cells overlap");
      if (rel.adjacent) {
        adj[static_cast<size_t>(i) * n + j] = static_cast<uint8_t>(rel.slot + 1);
        adj[static_cast<size_t>(j) * n + i] =
            static_cast<uint8_t>((rel.slot + k) % (2 * k) + 1);
      }
    }
  }
  KPolyomino p = assemble(k, std::move(cells), std::move(adj));
  // Connectivity check.
  std::vector<int> seen(static_cast<size_t>(n), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int v = 0; v < n; ++v) {
      if (p.adjacency(u, v) && !seen[static_cast<size_t>(v)]) {
        seen[static_cast<size_t>(v)] = 1;
        queue.push_back(v);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n)
    throw std::invalid_argument("cells are not edge-connected");
  return p;
}

KPolyomino KPolyomino::from_code(int k, const Code& code) {
  if (code.empty()) throw std::invalid_argument("empty code");
  const int n = code[0];
  std::vector<CellPlacement> cells(static_cast<size_t>(n));
  std::vector<int> known(static_cast<size_t>(n), 0);
  for (auto& c : cells) c.center = CycNum(k);
  known[0] = 1;
  size_t pos = 1;
  bool root_parity_set = false;
  for (int u = 0; u < n; ++u) {
    int deg = code[pos++];
    for (int e = 0; e < deg; ++e) {
      int slot = code[pos++];
      int v = code[pos++];
      if (u == 0 && !root_parity_set) {
        cells[0].parity = slot & 1;
        root_parity_set = true;
      }
      if (!known[static_cast<size_t>(v)]) {
        cells[static_cast<size_t>(v)].center =
            cells[static_cast<size_t>(u)].center + CycNum::unit(k, slot);
        cells[static_cast<size_t>(v)].parity = (slot + k) & 1;
        known[static_cast<size_t>(v)] = 1;
      }
    }
  }
  return from_placements(k, std::move(cells));
}

int KPolyomino::degree(int i) const {
  int n = size(), d = 0;
  for (int j = 0; j < n; ++j)
    if (adjacency(i, j)) ++d;
  return d;
}

bool KPolyomino::slot_used(int i, int d) const {
  int n = size();
  for (int j = 0; j < n; ++j)
    if (adjacency(i, j) == d + 1) return true;
  return false;
}

int KPolyomino::adjacent_pairs() const {
  int n = size(), e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adjacency(i, j)) ++e;
  return e;
}

Code KPolyomino::canonical_code(CodeWitness* w) const {
  return canonical_code_of(k_, cells_, adj_, w);
}

long KPolyomino::edge_count() const {
  return static_cast<long>(k_) * size() - adjacent_pairs();
}

GraphClass4 KPolyomino::graph_class4() const {
  if (size() != 4) throw WrongSizeError("graph_class4 requires exactly 4 cells");
  int e = adjacent_pairs();
  std::array<int, 4> deg{};
  for (int i = 0; i < 4; ++i) deg[static_cast<size_t>(i)] = degree(i);
  std::sort(deg.begin(), deg.end());
  if (e == 3 && deg == std::array<int, 4>{1, 1, 1, 3}) return GraphClass4::Star;
  if (e == 3 && deg == std::array<int, 4>{1, 1, 2, 2}) return GraphClass4::Path;
  if (e == 4 && deg == std::array<int, 4>{1, 2, 2, 3}) return GraphClass4::StarPlusEdge;
  if (e == 4 && deg == std::array<int, 4>{2, 2, 2, 2}) return GraphClass4::Cycle;
  if (e == 5 && deg == std::array<int, 4>{2, 2, 3, 3}) return GraphClass4::StarPlusTwoEdges;
  throw std::logic_error("4-cell adjacency graph outside the known classes");
}

bool KPolyomino::removal_keeps_connected(int cell) const {
  int n = size();
  if (n <= 1) return false;
  int start = cell == 0 ? 1 : 0;
  std::vector<int> seen(static_cast<size_t>(n), 0);
  std::vector<int> queue{start};
  seen[static_cast<size_t>(start)] = 1;
  int visited = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int v = 0; v < n; ++v) {
      if (v == cell || seen[static_cast<size_t>(v)] || !adjacency(u, v)) continue;
      seen[static_cast<size_t>(v)] = 1;
      ++visited;
      queue.push_back(v);
    }
  }
  return visited == n - 1;
}

void KPolyomino::validate() const {
  int n = size();
  if (n < 1) throw std::logic_error("empty polyomino");
  if (!cells_[0].center.is_zero() || cells_[0].parity != 0)
    throw std::logic_error("root cell is not at the origin with parity 0");
  int dmax = max_degree(k_);
  for (int i = 0; i < n; ++i) {
    int d = degree(i);
    if (n >= 2 && (d < 1 || d > dmax))
      throw std::logic_error("cell degree outside [1, max_degree]");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      PairClass pc = classify_pair(k_, cells_[static_cast<size_t>(i)], cells_[static_cast<size_t>(j)]);
      int expect = adjacency(i, j);
      if (pc.kind == PairKind::Identical || pc.kind == PairKind::Overlapping)
        throw std::logic_error("overlapping pair inside a polyomino");
      if (pc.kind == PairKind::EdgeAdjacent) {
        if (expect != pc.slot + 1)
          throw std::logic_error("adjacency matrix disagrees with geometry");
        int back = adjacency(j, i);
        if (back != (pc.slot + k_) % (2 * k_) + 1)
          throw std::logic_error("asymmetric adjacency slots");
      } else if (expect != 0) {
        throw std::logic_error("adjacency recorded for a non-adjacent pair");
      }
    }
  }
  std::vector<int> seen(static_cast<size_t>(n), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (int v = 0; v < n; ++v) {
      if (!seen[static_cast<size_t>(v)] && adjacency(queue[qi], v)) {
        seen[static_cast<size_t>(v)] = 1;
        queue.push_back(v);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n)
    throw std::logic_error("adjacency graph is disconnected");
}

}  // namespace kpoly
