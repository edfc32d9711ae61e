#include "kpoly/kpoly.h"

#include "enumerate.hpp"
#include "formulas.hpp"
#include "render.hpp"
#include "tables.hpp"
#include "verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>

struct kpoly_poly {
  kpoly::KPolyomino p;
};

struct kpoly_levels {
  std::vector<kpoly::LevelSet> levels;
};

namespace {

using kpoly::BadKError;
using kpoly::BadNError;
using kpoly::BadSlotError;
using kpoly::BudgetExceededError;
using kpoly::KMismatchError;
using kpoly::NotRealError;
using kpoly::OverlapError;
using kpoly::WrongSizeError;

template <typename Fn>
kpoly_status guarded(Fn&& fn) {
  try {
    fn();
    return KPOLY_OK;
  } catch (const BadSlotError&) {
    return KPOLY_EBADSLOT;
  } catch (const OverlapError&) {
    return KPOLY_EOVERLAP;
  } catch (const KMismatchError&) {
    return KPOLY_EKMISMATCH;
  } catch (const NotRealError&) {
    return KPOLY_ENOTREAL;
  } catch (const BudgetExceededError&) {
    return KPOLY_EBUDGET;
  } catch (const BadNError&) {
    return KPOLY_EBADARG;
  } catch (const BadKError&) {
    return KPOLY_EBADARG;
  } catch (const WrongSizeError&) {
    return KPOLY_EBADARG;
  } catch (const std::invalid_argument&) {
    return KPOLY_EBADARG;
  } catch (const std::bad_alloc&) {
    return KPOLY_EINTERNAL;
  } catch (const std::exception&) {
    return KPOLY_EINTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

kpoly::Method to_method(kpoly_method m) {
  switch (m) {
    case KPOLY_METHOD_FORMULA: return kpoly::Method::Formula;
    case KPOLY_METHOD_ORACLE: return kpoly::Method::Oracle;
    default: return kpoly::Method::Orderly;
  }
}

uint64_t effective_budget(uint64_t budget) {
  return budget == 0 ? kpoly::EnumerateOptions{}.budget : budget;
}

const kpoly::LevelSet* level_at(const kpoly_levels* l, int n) {
  if (!l || n < 1 || n > static_cast<int>(l->levels.size())) return nullptr;
  return &l->levels[static_cast<size_t>(n - 1)];
}

}  // namespace

extern "C" {

const char* kpoly_status_message(kpoly_status s) {
  switch (s) {
    case KPOLY_OK: return "ok";
    case KPOLY_EBADARG: return "invalid argument";
    case KPOLY_EBADSLOT: return "bad direction slot";
    case KPOLY_EOVERLAP: return "cells overlap";
    case KPOLY_EKMISMATCH: return "mixed k values";
    case KPOLY_ENOTREAL: return "value is not real";
    case KPOLY_EBUDGET: return "candidate budget exceeded";
    case KPOLY_EVERIFY: return "verification mismatch";
    case KPOLY_EIO: return "i/o error";
    default: return "internal error";
  }
}

void kpoly_string_free(char* s) { ::free(s); }

kpoly_status kpoly_count_formula(int64_t k, int n, uint64_t* out) {
  if (!out) return KPOLY_EBADARG;
  return guarded([&] { *out = static_cast<uint64_t>(kpoly::count_formula(k, n)); });
}

kpoly_status kpoly_count_star4(int64_t k, uint64_t* out) {
  if (!out) return KPOLY_EBADARG;
  return guarded([&] { *out = static_cast<uint64_t>(kpoly::count_star4(k)); });
}

kpoly_status kpoly_count_path4(int64_t k, uint64_t* out) {
  if (!out) return KPOLY_EBADARG;
  return guarded([&] { *out = static_cast<uint64_t>(kpoly::count_path4(k)); });
}

kpoly_status kpoly_partitions_le3(int64_t m, uint64_t* out) {
  if (!out) return KPOLY_EBADARG;
  return guarded([&] { *out = static_cast<uint64_t>(kpoly::partitions_le3(m)); });
}

kpoly_status kpoly_max_degree(int64_t k, int* out) {
  if (!out) return KPOLY_EBADARG;
  return guarded([&] { *out = kpoly::max_degree(k); });
}

kpoly_status kpoly_edge_bounds(int k, int64_t n, int64_t* lo, int64_t* hi) {
  if (!lo || !hi) return KPOLY_EBADARG;
  return guarded([&] {
    auto [l, h] = kpoly::edge_bounds(k, n);
    *lo = l;
    *hi = h;
  });
}

kpoly_status kpoly_edge_upper_general(int64_t k, int64_t n, int64_t* out) {
  if (!out) return KPOLY_EBADARG;
  return guarded([&] { *out = kpoly::edge_upper_general(k, n); });
}

kpoly_status kpoly_discrete_angle(int k, int d1, int d2, int* out) {
  if (!out) return KPOLY_EBADARG;
  return guarded([&] { *out = kpoly::discrete_angle(k, d1, d2); });
}

kpoly_status kpoly_chain3_admissible(int k, int delta, int* out) {
  if (!out || k < 3) return KPOLY_EBADARG;
  *out = kpoly::chain3_admissible(k, delta) ? 1 : 0;
  return KPOLY_OK;
}

kpoly_status kpoly_chain3_touching(int k, int* out) {
  if (!out || k < 3) return KPOLY_EBADARG;
  *out = kpoly::chain3_touching(k) ? 1 : 0;
  return KPOLY_OK;
}

kpoly_status kpoly_chain4_admissible(int k, int d1, int d2, int* out) {
  if (!out || k < 3) return KPOLY_EBADARG;
  *out = kpoly::chain4_admissible(k, d1, d2) ? 1 : 0;
  return KPOLY_OK;
}

kpoly_status kpoly_chain4_closes_cycle(int k, int d1, int d2, int* out) {
  if (!out || k < 3) return KPOLY_EBADARG;
  *out = kpoly::chain4_closes_cycle(k, d1, d2) ? 1 : 0;
  return KPOLY_OK;
}

kpoly_status kpoly_build(int k, int n_steps, const int* parents, const int* slots,
                         kpoly_poly** out) {
  if (!out || n_steps < 0 || (n_steps > 0 && (!parents || !slots)))
    return KPOLY_EBADARG;
  *out = nullptr;
  return guarded([&] {
    std::vector<std::pair<int, int>> steps;
    steps.reserve(static_cast<size_t>(n_steps));
    for (int i = 0; i < n_steps; ++i) steps.emplace_back(parents[i], slots[i]);
    auto p = new kpoly_poly{kpoly::KPolyomino::build(k, steps)};
    *out = p;
  });
}

void kpoly_poly_free(kpoly_poly* p) { delete p; }

int kpoly_poly_size(const kpoly_poly* p) { return p ? p->p.size() : 0; }

kpoly_status kpoly_poly_adjacency(const kpoly_poly* p, int i, int j, int* out) {
  if (!p || !out || i < 0 || j < 0 || i >= p->p.size() || j >= p->p.size())
    return KPOLY_EBADARG;
  *out = p->p.adjacency(i, j);
  return KPOLY_OK;
}

kpoly_status kpoly_poly_edge_count(const kpoly_poly* p, int64_t* q) {
  if (!p || !q) return KPOLY_EBADARG;
  *q = p->p.edge_count();
  return KPOLY_OK;
}

kpoly_status kpoly_poly_graph_class4(const kpoly_poly* p, kpoly_graph4* out) {
  if (!p || !out) return KPOLY_EBADARG;
  return guarded([&] {
    switch (p->p.graph_class4()) {
      case kpoly::GraphClass4::Star: *out = KPOLY_GRAPH4_STAR; break;
      case kpoly::GraphClass4::StarPlusEdge: *out = KPOLY_GRAPH4_STAR_PLUS_EDGE; break;
      case kpoly::GraphClass4::StarPlusTwoEdges:
        *out = KPOLY_GRAPH4_STAR_PLUS_TWO_EDGES;
        break;
      case kpoly::GraphClass4::Path: *out = KPOLY_GRAPH4_PATH; break;
      case kpoly::GraphClass4::Cycle: *out = KPOLY_GRAPH4_CYCLE; break;
    }
  });
}

kpoly_status kpoly_poly_code(const kpoly_poly* p, int32_t* buf, size_t cap,
                             size_t* len) {
  if (!p || !len) return KPOLY_EBADARG;
  return guarded([&] {
    kpoly::Code code = p->p.canonical_code();
    *len = code.size();
    if (code.size() > cap || !buf) throw std::invalid_argument("buffer too small");
    std::memcpy(buf, code.data(), code.size() * sizeof(int32_t));
  });
}

kpoly_status kpoly_poly_svg(const kpoly_poly* p, char** svg) {
  if (!p || !svg) return KPOLY_EBADARG;
  return guarded([&] {
    *svg = dup_string(kpoly::svg_for(p->p));
    if (!*svg) throw std::bad_alloc();
  });
}

kpoly_status kpoly_enumerate(int k, int n_max, kpoly_method method, int workers,
                             uint64_t budget, kpoly_levels** out) {
  if (!out || method == KPOLY_METHOD_FORMULA) return KPOLY_EBADARG;
  *out = nullptr;
  return guarded([&] {
    kpoly::EnumerateOptions opt;
    opt.budget = effective_budget(budget);
    opt.workers = workers < 1 ? 1 : workers;
    auto levels = method == KPOLY_METHOD_ORACLE
                      ? kpoly::enumerate_oracle(k, n_max, opt)
                      : kpoly::enumerate_orderly(k, n_max, opt);
    *out = new kpoly_levels{std::move(levels)};
  });
}

void kpoly_levels_free(kpoly_levels* l) { delete l; }

kpoly_status kpoly_levels_count(const kpoly_levels* l, int n, uint64_t* count) {
  const kpoly::LevelSet* ls = level_at(l, n);
  if (!ls || !count) return KPOLY_EBADARG;
  *count = ls->stats.accepted;
  return KPOLY_OK;
}

kpoly_status kpoly_levels_stats(const kpoly_levels* l, int n, uint64_t* c_naive,
                                uint64_t* c_glue, uint64_t* accepted) {
  const kpoly::LevelSet* ls = level_at(l, n);
  if (!ls) return KPOLY_EBADARG;
  if (c_naive) *c_naive = ls->stats.candidates_naive;
  if (c_glue) *c_glue = ls->stats.candidates_glue;
  if (accepted) *accepted = ls->stats.accepted;
  return KPOLY_OK;
}

kpoly_status kpoly_levels_edge_range(const kpoly_levels* l, int n, int64_t* q_min,
                                     int64_t* q_max) {
  const kpoly::LevelSet* ls = level_at(l, n);
  if (!ls || !q_min || !q_max || ls->classes.empty()) return KPOLY_EBADARG;
  bool first = true;
  for (const auto& [code, rep] : ls->classes) {
    long q = rep.edge_count();
    if (first || q < *q_min) *q_min = q;
    if (first || q > *q_max) *q_max = q;
    first = false;
  }
  return KPOLY_OK;
}

kpoly_status kpoly_levels_max_degree(const kpoly_levels* l, int n, int* deg_max) {
  const kpoly::LevelSet* ls = level_at(l, n);
  if (!ls || !deg_max) return KPOLY_EBADARG;
  int best = 0;
  for (const auto& [code, rep] : ls->classes)
    for (int i = 0; i < rep.size(); ++i) best = std::max(best, rep.degree(i));
  *deg_max = best;
  return KPOLY_OK;
}

kpoly_status kpoly_levels_graph_split4(const kpoly_levels* l, uint64_t* stars,
                                       uint64_t* paths_cycles) {
  const kpoly::LevelSet* ls = level_at(l, 4);
  if (!ls || !stars || !paths_cycles) return KPOLY_EBADARG;
  return guarded([&] {
    uint64_t s = 0, pc = 0;
    for (const auto& [code, rep] : ls->classes) {
      switch (rep.graph_class4()) {
        case kpoly::GraphClass4::Star:
        case kpoly::GraphClass4::StarPlusEdge:
        case kpoly::GraphClass4::StarPlusTwoEdges: ++s; break;
        default: ++pc;
      }
    }
    *stars = s;
    *paths_cycles = pc;
  });
}

kpoly_status kpoly_levels_render_svg(const kpoly_levels* l, int n_max,
                                     const char* out_dir, uint64_t limit,
                                     uint64_t* files_written) {
  if (!l || !out_dir) return KPOLY_EBADARG;
  return guarded([&] {
    uint64_t written = kpoly::write_svgs(l->levels, n_max, out_dir, limit);
    if (files_written) *files_written = written;
  });
}

kpoly_status kpoly_count_run(int k, int n, kpoly_method method, int workers,
                             uint64_t budget, char** json_line) {
  if (!json_line) return KPOLY_EBADARG;
  return guarded([&] {
    auto rec = kpoly::run_count(k, n, to_method(method), workers < 1 ? 1 : workers,
                                effective_budget(budget));
    *json_line = dup_string(kpoly::record_json_line(rec));
    if (!*json_line) throw std::bad_alloc();
  });
}

kpoly_status kpoly_table(int k_lo, int k_hi, int n_lo, int n_hi,
                         kpoly_method method, int workers, uint64_t budget,
                         kpoly_format format, char** out) {
  if (!out) return KPOLY_EBADARG;
  return guarded([&] {
    auto rows = kpoly::run_table(k_lo, k_hi, n_lo, n_hi, to_method(method),
                                 workers < 1 ? 1 : workers, effective_budget(budget));
    std::string text = format == KPOLY_FORMAT_CSV ? kpoly::table_csv(rows)
                                                  : kpoly::table_json(rows);
    *out = dup_string(text);
    if (!*out) throw std::bad_alloc();
  });
}

kpoly_status kpoly_edge_stats(int k, int n_lo, int n_hi, int workers,
                              uint64_t budget, kpoly_format format, char** out) {
  if (!out) return KPOLY_EBADARG;
  return guarded([&] {
    auto rows = kpoly::run_edge_stats(k, n_lo, n_hi, workers < 1 ? 1 : workers,
                                      effective_budget(budget));
    std::string text = format == KPOLY_FORMAT_CSV ? kpoly::edge_stats_csv(rows)
                                                  : kpoly::edge_stats_json(rows);
    *out = dup_string(text);
    if (!*out) throw std::bad_alloc();
  });
}

kpoly_status kpoly_verify(int k_max, int n_max, int workers, uint64_t budget,
                          char** report, int* ok) {
  if (!report || !ok) return KPOLY_EBADARG;
  return guarded([&] {
    kpoly::VerifyOptions opt;
    opt.k_max = k_max;
    opt.n_max = n_max;
    opt.workers = workers < 1 ? 1 : workers;
    opt.budget = effective_budget(budget);
    auto rep = kpoly::run_verify(opt);
    *report = dup_string(rep.text);
    if (!*report) throw std::bad_alloc();
    *ok = rep.ok ? 1 : 0;
  });
}

}  // extern "C"
