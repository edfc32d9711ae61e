#include "tables.hpp"

#include "formulas.hpp"

#include <json.hpp>

#include <chrono>

namespace kpoly {

using nlohmann::json;

const char* method_name(Method m) {
  switch (m) {
    case Method::Formula: return "formula";
    case Method::Oracle: return "oracle";
    default: return "orderly";
  }
}

std::optional<Method> parse_method(const std::string& s) {
  if (s == "formula") return Method::Formula;
  if (s == "oracle") return Method::Oracle;
  if (s == "orderly") return Method::Orderly;
  return std::nullopt;
}

namespace {

json record_to_json(const CountRecord& r, bool with_elapsed) {
  json j;
  j["k"] = r.k;
  j["n"] = r.n;
  j["count"] = std::to_string(r.count);
  j["method"] = method_name(r.method);
  if (r.candidates_naive || r.candidates_glue) {
    json c;
    if (r.candidates_naive) c["naive"] = std::to_string(*r.candidates_naive);
    if (r.candidates_glue) c["glue"] = std::to_string(*r.candidates_glue);
    j["candidates"] = c;
  }
  if (with_elapsed && r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

}  // namespace

std::string record_json_line(const CountRecord& r) {
  return record_to_json(r, true).dump();
}

std::string table_csv(const std::vector<CountRecord>& records) {
  std::string out = "k,n,count,method\n";
  for (const auto& r : records) {
    out += std::to_string(r.k) + "," + std::to_string(r.n) + "," +
           std::to_string(r.count) + "," + method_name(r.method) + "\n";
  }
  return out;
}

std::string table_json(const std::vector<CountRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back(record_to_json(r, false));
  return arr.dump(2) + "\n";
}

namespace {

std::vector<CountRecord> records_for_k(int k, int n_lo, int n_hi, Method method,
                                       int workers, uint64_t budget) {
  std::vector<CountRecord> rows;
  if (method == Method::Formula) {
    for (int n = n_lo; n <= n_hi; ++n) {
      CountRecord r;
      r.k = k;
      r.n = n;
      r.method = method;
      r.count = static_cast<uint64_t>(count_formula(k, n));
      rows.push_back(r);
    }
    return rows;
  }
  EnumerateOptions opt;
  opt.budget = budget;
  opt.workers = workers;
  auto levels = method == Method::Oracle ? enumerate_oracle(k, n_hi, opt)
                                         : enumerate_orderly(k, n_hi, opt);
  for (int n = n_lo; n <= n_hi; ++n) {
    const LevelSet& l = levels[static_cast<size_t>(n - 1)];
    CountRecord r;
    r.k = k;
    r.n = n;
    r.method = method;
    r.count = l.stats.accepted;
    if (method == Method::Oracle) {
      r.candidates_naive = l.stats.candidates_naive;
    } else {
      r.candidates_glue = l.stats.candidates_glue;
      if (l.stats.candidates_naive) r.candidates_naive = l.stats.candidates_naive;
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

CountRecord run_count(int k, int n, Method method, int workers, uint64_t budget) {
  auto t0 = std::chrono::steady_clock::now();
  auto rows = records_for_k(k, n, n, method, workers, budget);
  auto t1 = std::chrono::steady_clock::now();
  CountRecord r = rows.at(0);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

std::vector<CountRecord> run_table(int k_lo, int k_hi, int n_lo, int n_hi,
                                   Method method, int workers, uint64_t budget) {
  if (k_lo < 3 || k_hi < k_lo || n_lo < 1 || n_hi < n_lo)
    throw std::invalid_argument("empty or invalid k/n range");
  if (method == Method::Formula && n_hi > 4)
    throw BadNError("formula method covers n <= 4 only");
  std::vector<CountRecord> rows;
  for (int k = k_lo; k <= k_hi; ++k) {
    auto part = records_for_k(k, n_lo, n_hi, method, workers, budget);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::vector<EdgeStatsRecord> run_edge_stats(int k, int n_lo, int n_hi,
                                            int workers, uint64_t budget) {
  if (k < 3 || n_lo < 1 || n_hi < n_lo)
    throw std::invalid_argument("empty or invalid range");
  EnumerateOptions opt;
  opt.budget = budget;
  opt.workers = workers;
  auto levels = enumerate_orderly(k, n_hi, opt);
  std::vector<EdgeStatsRecord> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const LevelSet& l = levels[static_cast<size_t>(n - 1)];
    EdgeStatsRecord r;
    r.k = k;
    r.n = n;
    r.classes = l.stats.accepted;
    r.general_hi = edge_upper_general(k, n);
    bool first = true;
    for (const auto& [code, rep] : l.classes) {
      long q = rep.edge_count();
      if (first || q < r.q_min) r.q_min = q;
      if (first || q > r.q_max) r.q_max = q;
      first = false;
    }
    if (k == 3 || k == 4 || k == 6) {
      auto [lo, hi] = edge_bounds(k, n);
      r.bound_lo = lo;
      r.bound_hi = hi;
      r.within = r.q_min >= lo && r.q_max <= hi;
    } else {
      r.within = r.q_max <= r.general_hi;
    }
    rows.push_back(r);
  }
  return rows;
}

std::string edge_stats_csv(const std::vector<EdgeStatsRecord>& rows) {
  std::string out = "k,n,classes,q_min,q_max,bound_lo,bound_hi,general_hi,within\n";
  for (const auto& r : rows) {
    out += std::to_string(r.k) + "," + std::to_string(r.n) + "," +
           std::to_string(r.classes) + "," + std::to_string(r.q_min) + "," +
           std::to_string(r.q_max) + ",";
    out += r.bound_lo ? std::to_string(*r.bound_lo) : "";
    out += ",";
    out += r.bound_hi ? std::to_string(*r.bound_hi) : "";
    out += "," + std::to_string(r.general_hi) + "," + (r.within ? "true" : "false") + "\n";
  }
  return out;
}

std::string edge_stats_json(const std::vector<EdgeStatsRecord>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["classes"] = std::to_string(r.classes);
    j["q_min"] = r.q_min;
    j["q_max"] = r.q_max;
    if (r.bound_lo) j["bound_lo"] = *r.bound_lo;
    if (r.bound_hi) j["bound_hi"] = *r.bound_hi;
    j["general_hi"] = r.general_hi;
    j["within"] = r.within;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

}  // namespace kpoly
