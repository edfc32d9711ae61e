#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kpoly {

using BigInt = boost::multiprecision::cpp_int;

struct NotRealError : std::domain_error {
  NotRealError() : std::domain_error("value has a nonzero imaginary part") {}
};

/// Axis-aligned box with double endpoints that is guaranteed to contain the
/// represented complex value.
struct ComplexInterval {
  double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;
  double width() const;
  bool contains(std::complex<double> z) const;
  bool real_excludes_zero() const { return re_lo > 0 || re_hi < 0; }
  bool imag_excludes_zero() const { return im_lo > 0 || im_hi < 0; }
};

/// Integer combination of powers of zeta = exp(i*pi/k), reduced by the rule
/// zeta^(k+j) = -zeta^j. Coefficient j multiplies zeta^j for 0 <= j < k.
///
/// x^k + 1 is not the minimal polynomial of zeta unless k is a power of two,
/// so distinct coefficient vectors can represent the same number. Equality is
/// therefore always decided through the remainder modulo the 2k-th cyclotomic
/// polynomial (is_zero, equals, reduced_key), never by comparing coefficients.
class CycNum {
 public:
  CycNum() = default;
  explicit CycNum(int k) : k_(k), c_(static_cast<size_t>(k)) {}

  /// zeta^slot for slot in [0, 2k).
  static CycNum unit(int k, int slot);
  static CycNum integer(int k, long v);

  int k() const { return k_; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt& coeff(int j) { return c_[static_cast<size_t>(j)]; }
  const BigInt& coeff(int j) const { return c_[static_cast<size_t>(j)]; }

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum operator*(const CycNum& o) const;

  /// Multiplication by zeta^slots (signed cyclic shift); slots may be any
  /// integer and is taken modulo 2k.
  CycNum shifted(int slots) const;
  CycNum conj() const;
  /// Adds w * zeta^slot in place, slot in [0, 2k).
  void add_unit(int slot, long w = 1);

  bool is_zero() const;
  bool equals(const CycNum& o) const;
  /// Remainder modulo the 2k-th cyclotomic polynomial: a canonical key, equal
  /// exactly for equal values. Length = deg Phi_2k.
  std::vector<BigInt> reduced_key() const;

  /// Double approximation plus a rigorous bound on |approx - true value|.
  std::complex<double> approx(double* abs_err = nullptr) const;
  /// Sum of coefficient magnitudes as a double (rounded up).
  double sum_abs() const;

  /// Enclosing box computed at the requested working precision (>= 24 bits).
  ComplexInterval to_float(int precision_bits) const;

 private:
  int k_ = 0;
  std::vector<BigInt> c_;
};

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<BigInt> cyclotomic_polynomial(long m);

/// Exact sign of a real element: symbolic zero test first, then interval
/// evaluation at doubling precision from 64 bits. Throws NotRealError if the
/// imaginary part is nonzero.
int sign_real(const CycNum& a);

/// Exact sign of the imaginary part (same strategy as sign_real).
int sign_imag(const CycNum& a);

/// Interval evaluation at a given precision (used by the sign ladder and by
/// soundness tests). Returns the box {re_lo, re_hi, im_lo, im_hi}.
ComplexInterval eval_interval(const CycNum& a, int bits);

namespace detail {
/// Per-k tables of cos(pi*j/k), sin(pi*j/k) for j in [0, 2k); memoized.
struct SlotTables {
  std::vector<double> cs, sn;
};
const SlotTables& slot_tables(int k);
/// Memoized Phi_2k coefficients for a given k.
const std::vector<BigInt>& phi_2k(int k);
/// Fast sign for a value known to be real by construction: double filter,
/// then symbolic zero test, then the precision ladder.
int sign_real_unchecked(const CycNum& a);
}  // namespace detail

}  // namespace kpoly
