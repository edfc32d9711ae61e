/* kpoly: exact counting and construction of k-polyominoes
 * (edge-to-edge connected, interior-disjoint unions of regular k-gons).
 *
 * C interface of the shared library. All functions return a kpoly_status;
 * results are written through out parameters. Objects are returned as opaque
 * handles released with the matching *_free function. Strings returned
 * through char** are heap-allocated and released with kpoly_string_free.
 */
#ifndef KPOLY_H
#define KPOLY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kpoly_status {
  KPOLY_OK = 0,
  KPOLY_EBADARG = 1,   /* invalid argument or range */
  KPOLY_EBADSLOT = 2,  /* direction slot out of range or wrong parity */
  KPOLY_EOVERLAP = 3,  /* construction produced overlapping cells */
  KPOLY_EKMISMATCH = 4,
  KPOLY_ENOTREAL = 5,
  KPOLY_EBUDGET = 6,   /* candidate budget exceeded */
  KPOLY_EVERIFY = 7,   /* verification found a mismatch */
  KPOLY_EIO = 8,
  KPOLY_EINTERNAL = 9
} kpoly_status;

typedef enum kpoly_method {
  KPOLY_METHOD_FORMULA = 0,
  KPOLY_METHOD_ORACLE = 1,
  KPOLY_METHOD_ORDERLY = 2
} kpoly_method;

typedef enum kpoly_format { KPOLY_FORMAT_CSV = 0, KPOLY_FORMAT_JSON = 1 } kpoly_format;

typedef enum kpoly_graph4 {
  KPOLY_GRAPH4_STAR = 0,
  KPOLY_GRAPH4_STAR_PLUS_EDGE = 1,
  KPOLY_GRAPH4_STAR_PLUS_TWO_EDGES = 2,
  KPOLY_GRAPH4_PATH = 3,
  KPOLY_GRAPH4_CYCLE = 4
} kpoly_graph4;

const char* kpoly_status_message(kpoly_status s);
void kpoly_string_free(char* s);

/* ---- closed-form counters (n <= 4) and bounds ---- */

kpoly_status kpoly_count_formula(int64_t k, int n, uint64_t* out);
kpoly_status kpoly_count_star4(int64_t k, uint64_t* out);
kpoly_status kpoly_count_path4(int64_t k, uint64_t* out);
kpoly_status kpoly_partitions_le3(int64_t m, uint64_t* out);
kpoly_status kpoly_max_degree(int64_t k, int* out);
kpoly_status kpoly_edge_bounds(int k, int64_t n, int64_t* lo, int64_t* hi);
kpoly_status kpoly_edge_upper_general(int64_t k, int64_t n, int64_t* out);

/* ---- chain predicates and discrete angles ---- */

kpoly_status kpoly_discrete_angle(int k, int d1, int d2, int* out);
kpoly_status kpoly_chain3_admissible(int k, int delta, int* out);
kpoly_status kpoly_chain3_touching(int k, int* out);
kpoly_status kpoly_chain4_admissible(int k, int d1, int d2, int* out);
kpoly_status kpoly_chain4_closes_cycle(int k, int d1, int d2, int* out);

/* ---- single polyominoes ---- */

typedef struct kpoly_poly kpoly_poly;

/* Builds from n_steps (parent index, slot) growth steps; the root cell is
 * implicit, so the result has n_steps + 1 cells. */
kpoly_status kpoly_build(int k, int n_steps, const int* parents, const int* slots,
                         kpoly_poly** out);
void kpoly_poly_free(kpoly_poly* p);
int kpoly_poly_size(const kpoly_poly* p);
/* slot+1 if cell j is edge-adjacent to cell i across that slot, else 0. */
kpoly_status kpoly_poly_adjacency(const kpoly_poly* p, int i, int j, int* out);
kpoly_status kpoly_poly_edge_count(const kpoly_poly* p, int64_t* q);
kpoly_status kpoly_poly_graph_class4(const kpoly_poly* p, kpoly_graph4* out);
/* Canonical code as int32 sequence; fails with KPOLY_EBADARG if cap is too
 * small (needed length is written to *len either way). */
kpoly_status kpoly_poly_code(const kpoly_poly* p, int32_t* buf, size_t cap,
                             size_t* len);
kpoly_status kpoly_poly_svg(const kpoly_poly* p, char** svg);

/* ---- enumeration ---- */

typedef struct kpoly_levels kpoly_levels;

/* Enumerates all classes for n = 1..n_max. budget == 0 selects the default
 * cap (10^7 candidates per level). */
kpoly_status kpoly_enumerate(int k, int n_max, kpoly_method method, int workers,
                             uint64_t budget, kpoly_levels** out);
void kpoly_levels_free(kpoly_levels* l);
kpoly_status kpoly_levels_count(const kpoly_levels* l, int n, uint64_t* count);
kpoly_status kpoly_levels_stats(const kpoly_levels* l, int n, uint64_t* c_naive,
                                uint64_t* c_glue, uint64_t* accepted);
kpoly_status kpoly_levels_edge_range(const kpoly_levels* l, int n, int64_t* q_min,
                                     int64_t* q_max);
kpoly_status kpoly_levels_max_degree(const kpoly_levels* l, int n, int* deg_max);
kpoly_status kpoly_levels_graph_split4(const kpoly_levels* l, uint64_t* stars,
                                       uint64_t* paths_cycles);
kpoly_status kpoly_levels_render_svg(const kpoly_levels* l, int n_max,
                                     const char* out_dir, uint64_t limit,
                                     uint64_t* files_written);

/* ---- command-level helpers used by the CLI ---- */

/* One count as a JSON line (count, method, candidates, elapsed_ms). */
kpoly_status kpoly_count_run(int k, int n, kpoly_method method, int workers,
                             uint64_t budget, char** json_line);
/* Count table over inclusive ranges, as CSV (k,n,count,method) or JSON. */
kpoly_status kpoly_table(int k_lo, int k_hi, int n_lo, int n_hi,
                         kpoly_method method, int workers, uint64_t budget,
                         kpoly_format format, char** out);
/* Edge statistics (q_min/q_max per n against the tabulated bounds). */
kpoly_status kpoly_edge_stats(int k, int n_lo, int n_hi, int workers,
                              uint64_t budget, kpoly_format format, char** out);
/* Cross-validation suites; *ok is 1 when every suite passed. */
kpoly_status kpoly_verify(int k_max, int n_max, int workers, uint64_t budget,
                          char** report, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* KPOLY_H */
