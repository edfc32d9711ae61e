#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace kpoly {

struct BadNError : std::invalid_argument {
  explicit BadNError(const std::string& what) : std::invalid_argument(what) {}
};
struct BadKError : std::invalid_argument {
  explicit BadKError(const std::string& what) : std::invalid_argument(what) {}
};

/// Number of partitions of m into at most three parts: floor((m^2+6m+12)/12).
int64_t partitions_le3(int64_t m);

/// Count of 4-cell classes whose adjacency graph contains a degree-3 hub
/// (star, star plus one or two extra edges).
int64_t count_star4(int64_t k);

/// Count of 4-cell classes whose adjacency graph is a path or a 4-cycle,
/// by residue of k mod 12.
int64_t count_path4(int64_t k);

/// Closed-form class counts for n in 1..4. Throws BadNError otherwise.
int64_t count_formula(int64_t k, int n);

/// Largest possible number of neighbors of one cell: min(k, k/floor((k+5)/6)).
int max_degree(int64_t k);

/// Sharp edge-count bounds for the three tiling shapes, computed with exact
/// integer square roots. Throws BadKError for k outside {3, 4, 6}.
std::pair<int64_t, int64_t> edge_bounds(int k, int64_t n);

/// The general upper bound (k-1)*n + 1, valid for every k.
int64_t edge_upper_general(int64_t k, int64_t n);

int64_t isqrt_floor(int64_t x);
int64_t isqrt_ceil(int64_t x);

}  // namespace kpoly
