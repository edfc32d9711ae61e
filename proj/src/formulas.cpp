#include "formulas.hpp"

#include <cmath>

namespace kpoly {

namespace {
void require_k(int64_t k) {
  if (k < 3) throw BadKError("k must be >= 3");
}
}  // namespace

int64_t partitions_le3(int64_t m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  return (m * m + 6 * m + 12) / 12;
}

int64_t count_star4(int64_t k) {
  require_k(k);
  return partitions_le3(k - 3 * ((k + 5) / 6));
}

int64_t count_path4(int64_t k) {
  require_k(k);
  int64_t q = 5 * k * k;
  switch (k % 12) {
    case 0:  q += 4 * k;       break;
    case 1:  q += 6 * k - 11;  break;
    case 2:  q += 12 * k + 4;  break;
    case 3:  q += 14 * k + 9;  break;
    case 4:  q += 20 * k + 32; break;
    case 5:  q += 22 * k + 5;  break;
    case 6:  q += 4 * k - 12;  break;
    case 7:  q += 6 * k + 1;   break;
    case 8:  q += 12 * k + 16; break;
    case 9:  q += 14 * k - 3;  break;
    case 10: q += 20 * k + 20; break;
    default: q += 22 * k + 17; break;
  }
  return q / 48;
}

int64_t count_formula(int64_t k, int n) {
  require_k(k);
  if (n < 1 || n > 4)
    throw BadNError("closed forms exist only for n in 1..4");
  if (n <= 2) return 1;
  if (n == 3) return k / 2 - (k + 5) / 6 + 1;
  int64_t q = 3 * k * k;
  switch (k % 12) {
    case 0:  q += 8 * k + 24;  break;
    case 1:  q += 4 * k - 7;   break;
    case 2:  q += 8 * k - 4;   break;
    case 3:  q += 10 * k + 15; break;
    case 4:  q += 14 * k + 16; break;
    case 5:  q += 16 * k + 13; break;
    case 6:  q += 8 * k + 12;  break;
    case 7:  q += 4 * k - 7;   break;
    case 8:  q += 8 * k + 8;   break;
    case 9:  q += 10 * k + 3;  break;
    case 10: q += 14 * k + 16; break;
    default: q += 16 * k + 13; break;
  }
  return q / 24;
}

int max_degree(int64_t k) {
  require_k(k);
  int64_t t = (k + 5) / 6;
  int64_t d = k / t;
  return static_cast<int>(d < k ? d : k);
}

int64_t isqrt_floor(int64_t x) {
  if (x < 0) throw std::invalid_argument("negative square root");
  if (x == 0) return 0;
  int64_t s = static_cast<int64_t>(std::sqrt(static_cast<double>(x)));
  while (s > 0 && s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s;
}

int64_t isqrt_ceil(int64_t x) {
  int64_t s = isqrt_floor(x);
  return s * s == x ? s : s + 1;
}

std::pair<int64_t, int64_t> edge_bounds(int k, int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  switch (k) {
    case 3: {
      // ceil((n + sqrt(6n))/2) with an exact square-root test.
      int64_t m = 6 * n;
      int64_t s = isqrt_floor(m);
      int64_t c = (s * s == m) ? (n + s + 1) / 2 : (n + s) / 2 + 1;
      return {n + c, 2 * n + 1};
    }
    case 4:
      return {2 * n + isqrt_ceil(4 * n), 3 * n + 1};
    case 6:
      return {3 * n - isqrt_ceil(12 * n - 3), 5 * n + 1};
    default:
      throw BadKError("edge bounds are tabulated for k in {3, 4, 6} only");
  }
}

int64_t edge_upper_general(int64_t k, int64_t n) {
  require_k(k);
  return (k - 1) * n + 1;
}

}  // namespace kpoly
