#pragma once

#include "enumerate.hpp"

#include <optional>
#include <string>

namespace kpoly {

enum class Method { Formula, Oracle, Orderly };

const char* method_name(Method m);
std::optional<Method> parse_method(const std::string& s);

struct CountRecord {
  int k = 0, n = 0;
  uint64_t count = 0;
  Method method = Method::Orderly;
  std::optional<uint64_t> candidates_naive, candidates_glue;
  std::optional<double> elapsed_ms;
};

/// One JSON object line for a single count run (includes candidates and
/// elapsed time when present). Counts are serialized as decimal strings.
std::string record_json_line(const CountRecord& r);

/// CSV with header "k,n,count,method", rows ordered k ascending then n.
std::string table_csv(const std::vector<CountRecord>& records);

/// JSON array of records without timing fields, so repeated runs and any
/// worker count produce identical bytes.
std::string table_json(const std::vector<CountRecord>& records);

/// Runs one count. Formula requires n <= 4 (BadNError otherwise).
CountRecord run_count(int k, int n, Method method, int workers, uint64_t budget);

/// Full table over inclusive ranges; one enumeration per k covers all n.
std::vector<CountRecord> run_table(int k_lo, int k_hi, int n_lo, int n_hi,
                                   Method method, int workers, uint64_t budget);

/// Edge-count statistics per size, with the tabulated bounds for k in
/// {3, 4, 6} and the general upper bound for all k.
struct EdgeStatsRecord {
  int k = 0, n = 0;
  uint64_t classes = 0;
  int64_t q_min = 0, q_max = 0;
  std::optional<int64_t> bound_lo, bound_hi;
  int64_t general_hi = 0;
  bool within = true;
};
std::vector<EdgeStatsRecord> run_edge_stats(int k, int n_lo, int n_hi,
                                            int workers, uint64_t budget);
std::string edge_stats_csv(const std::vector<EdgeStatsRecord>& rows);
std::string edge_stats_json(const std::vector<EdgeStatsRecord>& rows);

}  // namespace kpoly
