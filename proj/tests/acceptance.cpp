// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Heavier enumerations are cached and shared between criteria.

#include "enumerate.hpp"
#include "formulas.hpp"
#include "tables.hpp"
#include "verify.hpp"

#include <kpoly/kpoly.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

using namespace kpoly;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  criterion %2d  %-24s  %6.1fs  %s\n", o.pass ? "PASS" : "FAIL",
              id, name, secs, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string seq_str(const std::vector<uint64_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<uint64_t> level_counts(const std::vector<LevelSet>& levels) {
  std::vector<uint64_t> out;
  for (const auto& l : levels) out.push_back(l.stats.accepted);
  return out;
}

EnumerateOptions fast_opts() {
  EnumerateOptions opt;
  opt.workers = 4;
  return opt;
}

// Shared enumeration caches.
std::map<int, std::vector<LevelSet>> g_orderly6;  // k -> levels n<=6
std::map<int, std::vector<LevelSet>> g_family;    // k in {3,4,6} deep runs

Outcome closed_forms() {
  for (int64_t k = 3; k <= 1'000'000; ++k) {
    int64_t path_num = 5 * k * k;
    switch (k % 12) {
      case 0: path_num += 4 * k; break;
      case 1: path_num += 6 * k - 11; break;
      case 2: path_num += 12 * k + 4; break;
      case 3: path_num += 14 * k + 9; break;
      case 4: path_num += 20 * k + 32; break;
      case 5: path_num += 22 * k + 5; break;
      case 6: path_num += 4 * k - 12; break;
      case 7: path_num += 6 * k + 1; break;
      case 8: path_num += 12 * k + 16; break;
      case 9: path_num += 14 * k - 3; break;
      case 10: path_num += 20 * k + 20; break;
      default: path_num += 22 * k + 17; break;
    }
    int64_t total_num = 3 * k * k;
    switch (k % 12) {
      case 0: total_num += 8 * k + 24; break;
      case 1: total_num += 4 * k - 7; break;
      case 2: total_num += 8 * k - 4; break;
      case 3: total_num += 10 * k + 15; break;
      case 4: total_num += 14 * k + 16; break;
      case 5: total_num += 16 * k + 13; break;
      case 6: total_num += 8 * k + 12; break;
      case 7: total_num += 4 * k - 7; break;
      case 8: total_num += 8 * k + 8; break;
      case 9: total_num += 10 * k + 3; break;
      case 10: total_num += 14 * k + 16; break;
      default: total_num += 16 * k + 13; break;
    }
    if (path_num % 48 != 0 || total_num % 24 != 0)
      return {false, "divisibility fails at k=" + std::to_string(k)};
    if (count_path4(k) != path_num / 48)
      return {false, "path count mismatch at k=" + std::to_string(k)};
    if (count_star4(k) + count_path4(k) != count_formula(k, 4))
      return {false, "decomposition fails at k=" + std::to_string(k)};
    if (count_formula(k, 1) != 1 || count_formula(k, 2) != 1)
      return {false, "n<=2 count wrong at k=" + std::to_string(k)};
  }
  if (count_formula(13, 4) != 23) return {false, "a_13(4) != 23"};
  if (count_formula(17, 4) != 48) return {false, "a_17(4) != 48"};
  return {true, "k up to 10^6; a_13(4)=23, a_17(4)=48"};
}

Outcome known_sequences() {
  struct Family {
    int k;
    std::vector<uint64_t> expect;
  };
  const Family fams[] = {
      {3, {1, 1, 1, 3, 4, 12, 24, 66, 160, 448}},
      {4, {1, 1, 2, 5, 12, 35, 108, 369, 1285}},
      {6, {1, 1, 3, 7, 22, 82, 333, 1448}},
  };
  for (const auto& f : fams) {
    auto levels = enumerate_orderly(f.k, static_cast<int>(f.expect.size()), fast_opts());
    auto got = level_counts(levels);
    if (got != f.expect)
      return {false, "k=" + std::to_string(f.k) + ": got " + seq_str(got)};
    g_family[f.k] = std::move(levels);
  }
  return {true, "triangles to n=10, squares to n=9, hexagons to n=8"};
}

Outcome spot_checks() {
  struct Spot {
    int k, n;
    uint64_t expect;
  };
  const Spot spots[] = {{5, 5, 25},   {5, 6, 118},  {7, 6, 118},  {7, 7, 558},
                        {8, 5, 50},   {12, 5, 168}, {20, 5, 776}, {21, 5, 972},
                        {35, 5, 4789}, {50, 5, 12309}};
  std::string timing;
  for (const auto& s : spots) {
    auto t0 = std::chrono::steady_clock::now();
    auto levels = enumerate_orderly(s.k, s.n, fast_opts());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    uint64_t got = levels.back().stats.accepted;
    if (got != s.expect)
      return {false, "a_" + std::to_string(s.k) + "(" + std::to_string(s.n) +
                         ") = " + std::to_string(got) + ", expected " +
                         std::to_string(s.expect)};
    if (secs > 60.0)
      return {false, "a_" + std::to_string(s.k) + "(" + std::to_string(s.n) +
                         ") took " + std::to_string(secs) + "s"};
  }
  return {true, "10 table entries, each under 60 s"};
}

Outcome generator_equivalence() {
  for (int k = 3; k <= 20; ++k) {
    auto orderly = enumerate_orderly(k, 6, fast_opts());
    auto oracle = enumerate_oracle(k, 6, fast_opts());
    for (int n = 1; n <= 6; ++n) {
      const auto& a = oracle[static_cast<size_t>(n - 1)].classes;
      const auto& b = orderly[static_cast<size_t>(n - 1)].classes;
      if (a.size() != b.size())
        return {false, "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                           ": sizes " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size())};
      auto ita = a.begin();
      auto itb = b.begin();
      for (; ita != a.end(); ++ita, ++itb) {
        if (ita->first != itb->first)
          return {false,
                  "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": code sets differ"};
      }
    }
    g_orderly6[k] = std::move(orderly);
  }
  return {true, "identical code sets for k in 3..20, n <= 6"};
}

Outcome lemma_equivalence() {
  auto root = [](int k) { return CellPlacement{CycNum(k), 0}; };
  for (int k = 3; k <= 30; ++k) {
    int touch_delta = (k + 5) / 6;
    for (int delta = 1; delta <= k / 2; ++delta) {
      CellPlacement mid = root(k);
      CellPlacement c1 = neighbor_placement(k, mid, 0);
      CellPlacement c3 = neighbor_placement(k, mid, 2 * delta);
      PairClass pc = classify_pair(k, c1, c3);
      bool overlap = pc.kind == PairKind::Overlapping;
      if (overlap != !chain3_admissible(k, delta))
        return {false, "3-chain k=" + std::to_string(k) + " delta=" + std::to_string(delta)};
      bool adjacent = pc.kind == PairKind::EdgeAdjacent;
      if (adjacent != (delta == touch_delta && chain3_touching(k)))
        return {false, "3-chain contact k=" + std::to_string(k) + " delta=" + std::to_string(delta)};
    }
  }
  for (int k = 3; k <= 24; ++k) {
    int dmin = (k + 5) / 6;
    for (int d1 = dmin; d1 <= k / 2; ++d1) {
      for (int d2 = dmin; d2 <= k / 2; ++d2) {
        CellPlacement c2 = root(k);
        CellPlacement c3 = neighbor_placement(k, c2, 0);
        CellPlacement c1 = neighbor_placement(k, c2, 2 * d1);
        CellPlacement c4 = neighbor_placement(k, c3, (3 * k - 2 * d2) % (2 * k));
        PairClass pc = classify_pair(k, c1, c4);
        bool overlap =
            pc.kind == PairKind::Overlapping || pc.kind == PairKind::Identical;
        if (overlap != !chain4_admissible(k, d1, d2))
          return {false, "4-chain k=" + std::to_string(k) + " (" + std::to_string(d1) +
                             "," + std::to_string(d2) + ")"};
        if ((pc.kind == PairKind::EdgeAdjacent) != chain4_closes_cycle(k, d1, d2))
          return {false, "4-cycle k=" + std::to_string(k) + " (" + std::to_string(d1) +
                             "," + std::to_string(d2) + ")"};
      }
    }
  }
  return {true, "3-chains to k=30, 4-chains to k=24"};
}

Outcome figure_split() {
  for (int k = 3; k <= 30; ++k) {
    auto [stars, pc] = graph_split4(k);
    if (stars != static_cast<uint64_t>(count_star4(k)) ||
        pc != static_cast<uint64_t>(count_path4(k)))
      return {false, "k=" + std::to_string(k) + ": (" + std::to_string(stars) + "," +
                         std::to_string(pc) + ")"};
  }
  return {true, "hub vs path/cycle split matches for k in 3..30"};
}

Outcome degree_bound() {
  for (int k = 3; k <= 20; ++k) {
    int bound = max_degree(k);
    const auto& levels = g_orderly6.at(k);
    for (const auto& level : levels)
      for (const auto& [code, rep] : level.classes)
        for (int i = 0; i < rep.size(); ++i)
          if (rep.degree(i) > bound)
            return {false, "k=" + std::to_string(k) + " n=" + std::to_string(level.n) +
                               ": degree " + std::to_string(rep.degree(i))};
  }
  // Sharpness: the bound is reached. A cell of degree max_degree(k) needs
  // max_degree(k)+1 cells, so k=6 and k=12 are checked at n=7.
  for (int k : {3, 4, 6, 12}) {
    int bound = max_degree(k);
    int need = bound + 1;
    int best = 0;
    auto scan = [&](const std::vector<LevelSet>& levels) {
      for (const auto& level : levels)
        for (const auto& [code, rep] : level.classes)
          for (int i = 0; i < rep.size(); ++i) best = std::max(best, rep.degree(i));
    };
    if (need <= 7) {
      auto levels = enumerate_orderly(k, need, fast_opts());
      scan(levels);
    } else {
      scan(g_orderly6.at(k));
    }
    if (best != bound)
      return {false, "k=" + std::to_string(k) + ": max degree " + std::to_string(best) +
                         " never reaches " + std::to_string(bound)};
  }
  return {true, "bounded for k <= 20; attained for k in {3,4,6,12}"};
}

Outcome edge_bound_check() {
  for (int k : {3, 4, 6}) {
    const auto& levels = g_family.at(k);
    for (const auto& level : levels) {
      if (level.n > 8) break;
      auto [lo, hi] = edge_bounds(k, level.n);
      int64_t qmax = 0;
      for (const auto& [code, rep] : level.classes) {
        long q = rep.edge_count();
        if (q < lo || q > hi)
          return {false, "k=" + std::to_string(k) + " n=" + std::to_string(level.n) +
                             ": q=" + std::to_string(q) + " outside [" +
                             std::to_string(lo) + "," + std::to_string(hi) + "]"};
        qmax = std::max<int64_t>(qmax, q);
      }
      if (k == 4 && qmax != 3 * level.n + 1)
        return {false, "k=4 n=" + std::to_string(level.n) + ": max q " +
                           std::to_string(qmax) + " != 3n+1"};
    }
  }
  return {true, "k in {3,4,6}, n <= 8; k=4 maximum attained at every n"};
}

Outcome discrepancy() {
  auto levels = enumerate_orderly(17, 5, fast_opts());
  uint64_t got = levels[4].stats.accepted;
  if (got != 613 && got != 614)
    return {false, "a_17(5) = " + std::to_string(got) + ", matches neither 613 nor 614"};
  VerifyOptions vopt;
  vopt.k_max = 17;
  vopt.n_max = 5;
  vopt.workers = 4;
  auto report = run_verify(vopt);
  if (!report.ok) return {false, "verify failed:\n" + report.text};
  if (report.text.find("a_17(5) = " + std::to_string(got)) == std::string::npos)
    return {false, "verify report misses the a_17(5) note"};
  return {true, "a_17(5) = " + std::to_string(got) + ", conflict flagged by verify"};
}

Outcome determinism() {
  std::string first;
  for (int workers : {1, 2, 8}) {
    char* text = nullptr;
    kpoly_status s = kpoly_table(3, 12, 1, 6, KPOLY_METHOD_ORDERLY, workers, 0,
                                 KPOLY_FORMAT_CSV, &text);
    if (s != KPOLY_OK) return {false, kpoly_status_message(s)};
    std::string t(text);
    kpoly_string_free(text);
    if (first.empty())
      first = std::move(t);
    else if (t != first)
      return {false, "workers=" + std::to_string(workers) + " output differs"};
  }
  return {true, "byte-identical CSV for workers 1, 2, 8 (k <= 12, n <= 6)"};
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion(1, "closed-forms", closed_forms);
  criterion(2, "known-sequences", known_sequences);
  criterion(3, "table-spot-checks", spot_checks);
  criterion(4, "generator-equivalence", generator_equivalence);
  criterion(5, "lemma-equivalence", lemma_equivalence);
  criterion(6, "figure-split", figure_split);
  criterion(7, "degree-bound", degree_bound);
  criterion(8, "edge-bounds", edge_bound_check);
  criterion(9, "a17-discrepancy", discrepancy);
  criterion(10, "determinism", determinism);
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
