#include "verify.hpp"

#include "formulas.hpp"

#include <algorithm>
#include <cstdio>

namespace kpoly {

namespace {

struct Reporter {
  std::string text;
  bool ok = true;
  void pass(const std::string& name, const std::string& detail) {
    text += "PASS " + name + " (" + detail + ")\n";
  }
  void fail(const std::string& name, const std::string& detail) {
    ok = false;
    text += "FAIL " + name + ": " + detail + "\n";
  }
  void note(const std::string& msg) { text += "NOTE " + msg + "\n"; }
};

// End cells of the 3-chain with turn angle delta at the middle cell.
std::pair<CellPlacement, CellPlacement> chain3_ends(int k, int delta) {
  CellPlacement mid{CycNum(k), 0};
  CellPlacement c1 = neighbor_placement(k, mid, 0);
  CellPlacement c3 = neighbor_placement(k, mid, 2 * delta);
  return {c1, c3};
}

// End cells of the same-side 4-chain with turn angles (d1, d2).
std::pair<CellPlacement, CellPlacement> chain4_ends(int k, int d1, int d2) {
  CellPlacement c2{CycNum(k), 0};
  CellPlacement c3 = neighbor_placement(k, c2, 0);
  CellPlacement c1 = neighbor_placement(k, c2, 2 * d1);
  CellPlacement c4 = neighbor_placement(k, c3, (k - 2 * d2 + 2 * k) % (2 * k));
  return {c1, c4};
}

bool check_chain3(Reporter& rep, int k_hi) {
  for (int k = 3; k <= k_hi; ++k) {
    int touch_delta = (k + 5) / 6;
    for (int delta = 1; delta <= k / 2; ++delta) {
      auto [c1, c3] = chain3_ends(k, delta);
      PairClass pc = classify_pair(k, c1, c3);
      bool overlap = pc.kind == PairKind::Overlapping || pc.kind == PairKind::Identical;
      if (overlap == chain3_admissible(k, delta)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "k=%d delta=%d: overlap test mismatch", k, delta);
        rep.fail("chain3-equivalence", buf);
        return false;
      }
      bool adjacent = pc.kind == PairKind::EdgeAdjacent;
      bool expect_adjacent = delta == touch_delta && chain3_touching(k);
      if (adjacent != expect_adjacent) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "k=%d delta=%d: edge-contact mismatch", k, delta);
        rep.fail("chain3-equivalence", buf);
        return false;
      }
    }
  }
  rep.pass("chain3-equivalence", "k <= " + std::to_string(k_hi));
  return true;
}

bool check_chain4(Reporter& rep, int k_hi) {
  for (int k = 3; k <= k_hi; ++k) {
    int dmin = (k + 5) / 6;
    for (int d1 = dmin; d1 <= k / 2; ++d1) {
      for (int d2 = dmin; d2 <= k / 2; ++d2) {
        auto [c1, c4] = chain4_ends(k, d1, d2);
        PairClass pc = classify_pair(k, c1, c4);
        bool overlap = pc.kind == PairKind::Overlapping || pc.kind == PairKind::Identical;
        if (overlap == chain4_admissible(k, d1, d2)) {
          char buf[96];
          std::snprintf(buf, sizeof buf, "k=%d d1=%d d2=%d: overlap test mismatch", k, d1, d2);
          rep.fail("chain4-equivalence", buf);
          return false;
        }
        bool cycle = pc.kind == PairKind::EdgeAdjacent;
        if (cycle != chain4_closes_cycle(k, d1, d2)) {
          char buf[96];
          std::snprintf(buf, sizeof buf, "k=%d d1=%d d2=%d: cycle test mismatch", k, d1, d2);
          rep.fail("chain4-equivalence", buf);
          return false;
        }
      }
    }
  }
  rep.pass("chain4-equivalence", "k <= " + std::to_string(k_hi));
  return true;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
  Reporter rep;
  auto hook = opt.formula_hook ? opt.formula_hook
                               : [](int, int, int64_t v) { return v; };

  check_chain3(rep, std::max(30, opt.k_max));
  check_chain4(rep, std::max(24, opt.k_max));

  // Closed-form self-consistency: a_k(4) decomposes into hub and path counts.
  {
    bool good = true;
    for (int64_t k = 3; k <= std::max<int64_t>(1000, opt.k_max); ++k) {
      if (count_star4(k) + count_path4(k) != count_formula(k, 4)) {
        rep.fail("a4-decomposition", "k=" + std::to_string(k));
        good = false;
        break;
      }
    }
    if (good) rep.pass("a4-decomposition", "k <= " + std::to_string(std::max<int64_t>(1000, opt.k_max)));
  }

  // Enumerations, one pair of runs per k, shared by the suites below.
  EnumerateOptions eopt;
  eopt.budget = opt.budget;
  eopt.workers = opt.workers;

  bool formula_ok = true, sets_ok = true, degree_ok = true, revalid_ok = true;
  bool split_ok = true, edges_ok = true;
  int scanned_to = 2;

  for (int k = 3; k <= opt.k_max && (formula_ok && sets_ok); ++k) {
    scanned_to = k;
    auto orderly = enumerate_orderly(k, opt.n_max, eopt);
    auto oracle = enumerate_oracle(k, opt.n_max, eopt);

    for (int n = 1; n <= std::min(4, opt.n_max) && formula_ok; ++n) {
      int64_t expect = hook(k, n, count_formula(k, n));
      int64_t got = static_cast<int64_t>(orderly[static_cast<size_t>(n - 1)].stats.accepted);
      if (expect != got) {
        rep.fail("formula-vs-enumeration",
                 "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                     ": expected " + std::to_string(expect) + ", got " +
                     std::to_string(got));
        formula_ok = false;
      }
    }

    for (int n = 1; n <= opt.n_max && sets_ok; ++n) {
      const auto& a = oracle[static_cast<size_t>(n - 1)].classes;
      const auto& b = orderly[static_cast<size_t>(n - 1)].classes;
      bool equal = a.size() == b.size() &&
                   std::equal(a.begin(), a.end(), b.begin(),
                              [](const auto& x, const auto& y) {
                                return x.first == y.first;
                              });
      if (!equal) {
        rep.fail("oracle-vs-orderly",
                 "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                     ": code sets differ (" + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
        sets_ok = false;
      }
    }

    if (opt.n_max >= 4 && split_ok) {
      uint64_t stars = 0, paths = 0;
      for (const auto& [code, p] : orderly[3].classes) {
        switch (p.graph_class4()) {
          case GraphClass4::Star:
          case GraphClass4::StarPlusEdge:
          case GraphClass4::StarPlusTwoEdges:
            ++stars;
            break;
          default:
            ++paths;
        }
      }
      if (stars != static_cast<uint64_t>(count_star4(k)) ||
          paths != static_cast<uint64_t>(count_path4(k))) {
        rep.fail("graph-split4",
                 "k=" + std::to_string(k) + ": got (" + std::to_string(stars) +
                     ", " + std::to_string(paths) + "), expected (" +
                     std::to_string(count_star4(k)) + ", " +
                     std::to_string(count_path4(k)) + ")");
        split_ok = false;
      }
    }

    int dmax = max_degree(k);
    for (const LevelSet& level : orderly) {
      for (const auto& [code, p] : level.classes) {
        for (int i = 0; i < p.size() && degree_ok; ++i) {
          if (p.degree(i) > dmax) {
            rep.fail("degree-bound", "k=" + std::to_string(k) + " n=" +
                                         std::to_string(level.n) + ": degree " +
                                         std::to_string(p.degree(i)));
            degree_ok = false;
          }
        }
      }
    }

    if (revalid_ok) {
      for (const LevelSet& level : orderly) {
        for (const auto& [code, p] : level.classes) {
          try {
            p.validate();
          } catch (const std::exception& e) {
            rep.fail("revalidation", "k=" + std::to_string(k) + " n=" +
                                         std::to_string(level.n) + ": " + e.what());
            revalid_ok = false;
            break;
          }
        }
        if (!revalid_ok) break;
      }
    }

    if ((k == 3 || k == 4 || k == 6) && edges_ok) {
      for (const LevelSet& level : orderly) {
        auto [lo, hi] = edge_bounds(k, level.n);
        for (const auto& [code, p] : level.classes) {
          long q = p.edge_count();
          if (q < lo || q > hi || q > edge_upper_general(k, level.n)) {
            rep.fail("edge-bounds", "k=" + std::to_string(k) + " n=" +
                                        std::to_string(level.n) + ": q=" +
                                        std::to_string(q));
            edges_ok = false;
            break;
          }
        }
        if (!edges_ok) break;
      }
    }

    if (k == 17 && opt.n_max >= 5) {
      uint64_t got = orderly[4].stats.accepted;
      rep.note("a_17(5) = " + std::to_string(got) +
               "; the published tables disagree with each other (one says 613, "
               "the other 614), so only one of them can match");
    }
  }

  std::string scanned = "k <= " + std::to_string(scanned_to);
  if (formula_ok)
    rep.pass("formula-vs-enumeration",
             scanned + ", n <= " + std::to_string(std::min(4, opt.n_max)));
  if (sets_ok)
    rep.pass("oracle-vs-orderly", scanned + ", n <= " + std::to_string(opt.n_max));
  if (split_ok && opt.n_max >= 4) rep.pass("graph-split4", scanned);
  if (degree_ok) rep.pass("degree-bound", scanned);
  if (edges_ok)
    rep.pass("edge-bounds", "k in {3,4,6}, n <= " + std::to_string(opt.n_max));
  if (revalid_ok)
    rep.pass("revalidation", scanned + ", n <= " + std::to_string(opt.n_max));
  rep.text += rep.ok ? "RESULT PASS\n" : "RESULT FAIL\n";

  VerifyReport out;
  out.ok = rep.ok;
  out.text = std::move(rep.text);
  return out;
}

}  // namespace kpoly
