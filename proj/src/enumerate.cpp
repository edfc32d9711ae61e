#include "enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace kpoly {

using detail::PlacementNum;
using detail::pair_relation;

namespace {

struct Budget {
  std::atomic<uint64_t>* used;
  uint64_t cap;
  void consume() const {
    if (used->fetch_add(1, std::memory_order_relaxed) + 1 > cap)
      throw BudgetExceededError(cap);
  }
};

std::vector<PlacementNum> cell_nums(const KPolyomino& p) {
  std::vector<PlacementNum> nums;
  nums.reserve(static_cast<size_t>(p.size()));
  for (const auto& c : p.cells()) nums.push_back(detail::placement_num(c));
  return nums;
}

using PlacementKey = std::pair<std::vector<BigInt>, int>;

PlacementKey placement_key(const CellPlacement& c) {
  return {c.center.reduced_key(), c.parity};
}

// Extends cells/adj by one validated cell whose adjacency row is given as
// slot-from-existing-cell values (-1 for non-adjacent), then inserts the
// canonical code of the result.
void insert_candidate(int k, const std::vector<CellPlacement>& cells,
                      const std::vector<uint8_t>& adj, const CellPlacement& e,
                      const std::vector<int>& row, std::set<Code>& out) {
  const int n = static_cast<int>(cells.size());
  std::vector<CellPlacement> cells2 = cells;
  cells2.push_back(e);
  std::vector<uint8_t> adj2(static_cast<size_t>(n + 1) * (n + 1), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      adj2[static_cast<size_t>(i) * (n + 1) + j] =
          adj[static_cast<size_t>(i) * n + j];
  for (int j = 0; j < n; ++j) {
    if (row[static_cast<size_t>(j)] < 0) continue;
    int d = row[static_cast<size_t>(j)];
    adj2[static_cast<size_t>(j) * (n + 1) + n] = static_cast<uint8_t>(d + 1);
    adj2[static_cast<size_t>(n) * (n + 1) + j] =
        static_cast<uint8_t>((d + k) % (2 * k) + 1);
  }
  out.insert(canonical_code_of(k, cells2, adj2));
}

// One-cell attachments at every free admissible slot of every cell, each
// validated against all existing cells. Returns the number of validated
// candidates; fills codes when a sink is given.
uint64_t expand_naive(const KPolyomino& p, std::set<Code>* out, const Budget& budget) {
  const int k = p.k(), n = p.size();
  const auto& tab = detail::slot_tables(k);
  auto nums = cell_nums(p);
  uint64_t validated = 0;
  std::set<PlacementKey> seen;  // dedup per parent before coding
  std::vector<int> row(static_cast<size_t>(n));

  for (int i = 0; i < n; ++i) {
    const CellPlacement& ci = p.cells()[static_cast<size_t>(i)];
    for (int d = ci.parity & 1; d < 2 * k; d += 2) {
      if (p.slot_used(i, d)) continue;
      budget.consume();
      CellPlacement e{ci.center + CycNum::unit(k, d), (ci.parity + k) & 1};
      PlacementNum en{nums[static_cast<size_t>(i)].z +
                          std::complex<double>(tab.cs[d], tab.sn[d]),
                      nums[static_cast<size_t>(i)].sum_abs + 1.0};
      bool ok = true;
      std::fill(row.begin(), row.end(), -1);
      for (int j = 0; j < n; ++j) {
        auto rel = pair_relation(k, p.cells()[static_cast<size_t>(j)],
                                 nums[static_cast<size_t>(j)], e, en);
        if (rel.overlapping) {
          ok = false;
          break;
        }
        if (rel.adjacent) row[static_cast<size_t>(j)] = rel.slot;
      }
      if (!ok) continue;
      ++validated;
      if (out && seen.insert(placement_key(e)).second)
        insert_candidate(k, p.cells(), p.adj(), e, row, *out);
    }
  }
  return validated;
}

// Valid one-cell extensions of a residue, stored in the frame the residue's
// canonical witness maps it onto, so they can be reused for any congruent
// residue through that residue's own witness. The key carries the frame
// parity of the start cell: the code alone does not pin it down for
// single-cell residues, where no slot appears in the code.
struct ExtEntry {
  CellPlacement cell;
  std::vector<std::pair<int, int>> adj_bfs;  // (BFS index of residue cell, slot)
};

using ExtCache = std::map<std::pair<Code, int>, std::vector<ExtEntry>>;

std::vector<ExtEntry> build_extensions(int k,
                                       const std::vector<CellPlacement>& rcells,
                                       const std::vector<uint8_t>& radj,
                                       const CodeWitness& wit) {
  const int m = static_cast<int>(rcells.size());
  std::vector<PlacementNum> nums;
  nums.reserve(rcells.size());
  for (const auto& c : rcells) nums.push_back(detail::placement_num(c));

  struct LocalExt {
    CellPlacement cell;
    std::vector<std::pair<int, int>> adj_local;  // (residue index, slot)
  };
  std::map<PlacementKey, LocalExt> found;
  const auto& tab = detail::slot_tables(k);

  for (int i = 0; i < m; ++i) {
    const CellPlacement& ci = rcells[static_cast<size_t>(i)];
    for (int d = ci.parity & 1; d < 2 * k; d += 2) {
      bool used = false;
      for (int j = 0; j < m && !used; ++j)
        used = radj[static_cast<size_t>(i) * m + j] == d + 1;
      if (used) continue;
      CellPlacement e{ci.center + CycNum::unit(k, d), (ci.parity + k) & 1};
      PlacementKey key = placement_key(e);
      if (found.count(key)) continue;
      PlacementNum en{nums[static_cast<size_t>(i)].z +
                          std::complex<double>(tab.cs[d], tab.sn[d]),
                      nums[static_cast<size_t>(i)].sum_abs + 1.0};
      LocalExt le;
      le.cell = e;
      bool ok = true;
      for (int j = 0; j < m; ++j) {
        auto rel = pair_relation(k, rcells[static_cast<size_t>(j)],
                                 nums[static_cast<size_t>(j)], e, en);
        if (rel.overlapping) {
          ok = false;
          break;
        }
        if (rel.adjacent) le.adj_local.emplace_back(j, rel.slot);
      }
      if (ok) found.emplace(std::move(key), std::move(le));
    }
  }

  // Map into the code frame of the witness.
  Isometry phi = witness_isometry(k, rcells, wit);
  std::vector<int> bfs_of_cell(static_cast<size_t>(m));
  for (int b = 0; b < m; ++b)
    bfs_of_cell[static_cast<size_t>(wit.order[static_cast<size_t>(b)])] = b;
  std::vector<ExtEntry> entries;
  entries.reserve(found.size());
  for (auto& [key, le] : found) {
    ExtEntry ee;
    ee.cell = phi.apply(k, le.cell);
    for (auto [j, d] : le.adj_local)
      ee.adj_bfs.emplace_back(bfs_of_cell[static_cast<size_t>(j)],
                              phi.map_slot(k, d));
    entries.push_back(std::move(ee));
  }
  return entries;
}

// Glue expansion of one parent: for every removable cell c, pull the cached
// extension set of the residue P-c back into the parent frame; each candidate
// costs exactly one new pair check, against c.
uint64_t expand_glue(const KPolyomino& p, ExtCache& cache, std::set<Code>* out,
                     const Budget& budget) {
  const int k = p.k(), n = p.size();
  auto nums = cell_nums(p);
  uint64_t produced = 0;
  std::set<PlacementKey> seen;  // per-parent candidate dedup
  std::vector<int> row(static_cast<size_t>(n));

  for (int c = 0; c < n; ++c) {
    if (!p.removal_keeps_connected(c)) continue;
    const int m = n - 1;
    std::vector<int> r_to_p;
    r_to_p.reserve(static_cast<size_t>(m));
    for (int i = 0; i < n; ++i)
      if (i != c) r_to_p.push_back(i);
    std::vector<CellPlacement> rcells;
    rcells.reserve(static_cast<size_t>(m));
    for (int i : r_to_p) rcells.push_back(p.cells()[static_cast<size_t>(i)]);
    std::vector<uint8_t> radj(static_cast<size_t>(m) * m, 0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        radj[static_cast<size_t>(a) * m + b] = static_cast<uint8_t>(
            p.adjacency(r_to_p[static_cast<size_t>(a)], r_to_p[static_cast<size_t>(b)]));

    CodeWitness wit;
    Code rcode = canonical_code_of(k, rcells, radj, &wit);
    int frame_parity =
        (rcells[static_cast<size_t>(wit.start)].parity + wit.rot) & 1;
    auto key = std::make_pair(std::move(rcode), frame_parity);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(std::move(key), build_extensions(k, rcells, radj, wit)).first;
    Isometry inv = witness_isometry(k, rcells, wit).inverse(k);

    const CellPlacement& removed = p.cells()[static_cast<size_t>(c)];
    PlacementKey removed_key = placement_key(removed);

    for (const ExtEntry& ee : it->second) {
      CellPlacement e = inv.apply(k, ee.cell);
      PlacementKey key = placement_key(e);
      if (key == removed_key) continue;  // re-adds the removed cell
      budget.consume();
      if (seen.count(key)) continue;  // same candidate via another removal
      PlacementNum en = detail::placement_num(e);
      auto rel = pair_relation(k, removed, nums[static_cast<size_t>(c)], e, en);
      if (rel.overlapping) continue;
      seen.insert(key);
      ++produced;
      if (out) {
        std::fill(row.begin(), row.end(), -1);
        for (auto [bfs, t] : ee.adj_bfs) {
          int rlocal = wit.order[static_cast<size_t>(bfs)];
          row[static_cast<size_t>(r_to_p[static_cast<size_t>(rlocal)])] =
              inv.map_slot(k, t);
        }
        if (rel.adjacent) row[static_cast<size_t>(c)] = rel.slot;
        insert_candidate(k, p.cells(), p.adj(), e, row, *out);
      }
    }
  }
  return produced;
}

struct WorkerOut {
  std::set<Code> codes;
  uint64_t counted = 0;
};

// Runs fn(parent index, worker index) over a contiguous partition of the
// parent list; per-worker results merge into one deterministic set afterward.
template <typename Fn>
void run_partitioned(size_t parent_count, int workers, Fn&& fn) {
  int w = std::max(1, workers);
  if (w == 1) {
    for (size_t i = 0; i < parent_count; ++i) fn(i, 0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(w));
  for (int t = 0; t < w; ++t) {
    size_t lo = parent_count * static_cast<size_t>(t) / static_cast<size_t>(w);
    size_t hi = parent_count * static_cast<size_t>(t + 1) / static_cast<size_t>(w);
    threads.emplace_back([&, t, lo, hi] {
      try {
        for (size_t i = lo; i < hi; ++i) fn(i, static_cast<size_t>(t));
      } catch (...) {
        errors[static_cast<size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<LevelSet> run_levels(int k, int n_max, bool orderly,
                                 const EnumerateOptions& opt) {
  if (k < 3) throw std::invalid_argument("k must be >= 3");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");

  std::vector<LevelSet> levels;
  {
    LevelSet l1;
    l1.k = k;
    l1.n = 1;
    KPolyomino root = KPolyomino::build(k, {});
    l1.classes.emplace(root.canonical_code(), std::move(root));
    l1.stats.accepted = 1;
    levels.push_back(std::move(l1));
  }

  for (int n = 2; n <= n_max; ++n) {
    const LevelSet& prev = levels.back();
    std::vector<const KPolyomino*> parents;
    parents.reserve(prev.classes.size());
    for (const auto& [code, rep] : prev.classes) parents.push_back(&rep);

    std::atomic<uint64_t> used{0};
    Budget budget{&used, opt.budget};
    bool glue = orderly && n >= 3;
    int w = std::max(1, opt.workers);
    std::vector<WorkerOut> outs(static_cast<size_t>(w));
    std::vector<ExtCache> caches(static_cast<size_t>(w));

    run_partitioned(parents.size(), w, [&](size_t pi, size_t wi) {
      if (glue) {
        outs[wi].counted +=
            expand_glue(*parents[pi], caches[wi], &outs[wi].codes, budget);
      } else {
        outs[wi].counted += expand_naive(*parents[pi], &outs[wi].codes, budget);
      }
    });

    LevelSet cur;
    cur.k = k;
    cur.n = n;
    std::set<Code> merged;
    uint64_t counted = 0;
    for (auto& wo : outs) {
      merged.merge(wo.codes);
      counted += wo.counted;
    }
    if (orderly) {
      cur.stats.candidates_glue = counted;
      if (opt.collect_naive) {
        std::atomic<uint64_t> nused{0};
        Budget nbudget{&nused, opt.budget};
        std::vector<uint64_t> ncounts(static_cast<size_t>(w), 0);
        run_partitioned(parents.size(), w, [&](size_t pi, size_t wi) {
          ncounts[wi] += expand_naive(*parents[pi], nullptr, nbudget);
        });
        for (uint64_t c : ncounts) cur.stats.candidates_naive += c;
      }
    } else {
      cur.stats.candidates_naive = counted;
    }

    for (const Code& code : merged)
      cur.classes.emplace(code, KPolyomino::from_code(k, code));
    cur.stats.accepted = cur.classes.size();
    levels.push_back(std::move(cur));
  }
  return levels;
}

}  // namespace

std::vector<LevelSet> enumerate_oracle(int k, int n_max, const EnumerateOptions& opt) {
  return run_levels(k, n_max, false, opt);
}

std::vector<LevelSet> enumerate_orderly(int k, int n_max, const EnumerateOptions& opt) {
  return run_levels(k, n_max, true, opt);
}

std::vector<LevelSet> enumerate_parallel(int k, int n_max, int workers,
                                         const EnumerateOptions& opt) {
  EnumerateOptions o = opt;
  o.workers = workers;
  return run_levels(k, n_max, true, o);
}

std::pair<uint64_t, uint64_t> graph_split4(int k, uint64_t budget) {
  EnumerateOptions opt;
  opt.budget = budget;
  auto levels = enumerate_oracle(k, 4, opt);
  uint64_t stars = 0, paths_cycles = 0;
  for (const auto& [code, rep] : levels[3].classes) {
    switch (rep.graph_class4()) {
      case GraphClass4::Star:
      case GraphClass4::StarPlusEdge:
      case GraphClass4::StarPlusTwoEdges:
        ++stars;
        break;
      case GraphClass4::Path:
      case GraphClass4::Cycle:
        ++paths_cycles;
        break;
    }
  }
  return {stars, paths_cycles};
}

}  // namespace kpoly
