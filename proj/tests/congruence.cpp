#include "congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kpoly::testing {

namespace {

using Key = std::pair<std::vector<BigInt>, int>;

Key key_of(const CellPlacement& c) { return {c.center.reduced_key(), c.parity}; }

std::multiset<Key> key_set(const std::vector<CellPlacement>& cells) {
  std::multiset<Key> s;
  for (const auto& c : cells) s.insert(key_of(c));
  return s;
}

std::vector<int> degree_profile(const KPolyomino& p) {
  std::vector<int> d;
  for (int i = 0; i < p.size(); ++i) d.push_back(p.degree(i));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool congruent(const KPolyomino& a, const KPolyomino& b) {
  if (a.k() != b.k() || a.size() != b.size()) return false;
  if (a.adjacent_pairs() != b.adjacent_pairs()) return false;
  if (degree_profile(a) != degree_profile(b)) return false;

  const int k = a.k();
  std::multiset<Key> target = key_set(b.cells());

  for (int rot = 0; rot < 2 * k; ++rot) {
    for (int refl = 0; refl < 2; ++refl) {
      // transform a's cells, then try anchoring its first cell on every cell
      // of b with a matching parity
      std::vector<CellPlacement> ta;
      ta.reserve(a.cells().size());
      for (const auto& c : a.cells()) {
        CycNum z = refl ? c.center.conj() : c.center;
        ta.push_back({z.shifted(rot), (c.parity + rot) & 1});
      }
      for (const auto& anchor : b.cells()) {
        if (anchor.parity != ta[0].parity) continue;
        CycNum shift = anchor.center - ta[0].center;
        std::multiset<Key> moved;
        for (const auto& c : ta) moved.insert(key_of({c.center + shift, c.parity}));
        if (moved == target) return true;
      }
    }
  }
  return false;
}

std::vector<uint64_t> counts_by_congruence(int k, int n_max) {
  std::vector<uint64_t> counts;
  std::vector<std::vector<KPolyomino>> levels;
  levels.push_back({KPolyomino::build(k, {})});
  counts.push_back(1);

  for (int n = 2; n <= n_max; ++n) {
    std::vector<KPolyomino> next;
    for (const KPolyomino& p : levels.back()) {
      for (int i = 0; i < p.size(); ++i) {
        const CellPlacement& ci = p.cells()[static_cast<size_t>(i)];
        for (int d = ci.parity & 1; d < 2 * k; d += 2) {
          if (p.slot_used(i, d)) continue;
          std::vector<CellPlacement> cells = p.cells();
          cells.push_back(neighbor_placement(k, ci, d));
          KPolyomino cand;
          try {
            cand = KPolyomino::from_placements(k, std::move(cells));
          } catch (const OverlapError&) {
            continue;
          }
          bool known = false;
          for (const KPolyomino& q : next) {
            if (congruent(cand, q)) {
              known = true;
              break;
            }
          }
          if (!known) next.push_back(std::move(cand));
        }
      }
    }
    counts.push_back(next.size());
    levels.push_back(std::move(next));
  }
  return counts;
}

}  // namespace kpoly::testing
