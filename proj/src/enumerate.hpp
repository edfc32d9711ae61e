#pragma once

#include "polyomino.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace kpoly {

struct BudgetExceededError : std::runtime_error {
  uint64_t budget;
  explicit BudgetExceededError(uint64_t b)
      : std::runtime_error("candidate budget of " + std::to_string(b) +
                           " per level exceeded"),
        budget(b) {}
};

struct GenerationStats {
  uint64_t candidates_naive = 0;  // validated one-cell attachments (c1 analog)
  uint64_t candidates_glue = 0;   // distinct glue candidates (c2 analog)
  uint64_t accepted = 0;
};

/// All classes of one size: canonical code -> canonical representative
/// (rebuilt from the code, so the map is independent of generation order).
struct LevelSet {
  int k = 0, n = 0;
  std::map<Code, KPolyomino> classes;
  GenerationStats stats;
};

struct EnumerateOptions {
  uint64_t budget = 10'000'000;  // candidates per level
  int workers = 1;
  bool collect_naive = false;  // during glue runs, also count naive candidates
};

/// Reference generator: attach one cell at every free admissible slot of
/// every representative and validate the new cell against all cells.
std::vector<LevelSet> enumerate_oracle(int k, int n_max,
                                       const EnumerateOptions& opt = {});

/// Production generator: a size-n candidate is a size-(n-1) representative P
/// with a removable cell c replaced residue P-c extended by a known valid
/// extension e, so only the pair (c, e) needs a geometric check.
std::vector<LevelSet> enumerate_orderly(int k, int n_max,
                                        const EnumerateOptions& opt = {});

/// enumerate_orderly partitioned across worker threads; results are identical
/// for every worker count.
std::vector<LevelSet> enumerate_parallel(int k, int n_max, int workers,
                                         const EnumerateOptions& opt = {});

/// Classifies all 4-cell classes into (degree-3-hub graphs, path-or-cycle
/// graphs); must match (count_star4, count_path4).
std::pair<uint64_t, uint64_t> graph_split4(int k, uint64_t budget = 10'000'000);

}  // namespace kpoly
