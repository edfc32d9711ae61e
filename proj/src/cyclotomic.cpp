#include "cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <string>

namespace kpoly {

double ComplexInterval::width() const {
  return std::max(re_hi - re_lo, im_hi - im_lo);
}

bool ComplexInterval::contains(std::complex<double> z) const {
  return re_lo <= z.real() && z.real() <= re_hi && im_lo <= z.imag() &&
         z.imag() <= im_hi;
}

CycNum CycNum::unit(int k, int slot) {
  CycNum r(k);
  r.add_unit(slot);
  return r;
}

CycNum CycNum::integer(int k, long v) {
  CycNum r(k);
  r.c_[0] = v;
  return r;
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum r = *this;
  r += o;
  return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum r = *this;
  r -= o;
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r(k_);
  for (int j = 0; j < k_; ++j) r.c_[j] = -c_[j];
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  for (int j = 0; j < k_; ++j) c_[j] += o.c_[j];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (int j = 0; j < k_; ++j) c_[j] -= o.c_[j];
  return *this;
}

CycNum CycNum::operator*(const CycNum& o) const {
  CycNum r(k_);
  for (int i = 0; i < k_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < k_; ++j) {
      if (o.c_[j] == 0) continue;
      int e = i + j;
      if (e < k_) {
        r.c_[e] += c_[i] * o.c_[j];
      } else {
        r.c_[e - k_] -= c_[i] * o.c_[j];
      }
    }
  }
  return r;
}

CycNum CycNum::shifted(int slots) const {
  int two_k = 2 * k_;
  int s = slots % two_k;
  if (s < 0) s += two_k;
  CycNum r(k_);
  for (int j = 0; j < k_; ++j) {
    if (c_[j] == 0) continue;
    int e = j + s;
    if (e >= two_k) e -= two_k;
    if (e < k_) {
      r.c_[e] += c_[j];
    } else {
      r.c_[e - k_] -= c_[j];
    }
  }
  return r;
}

CycNum CycNum::conj() const {
  CycNum r(k_);
  r.c_[0] = c_[0];
  for (int j = 1; j < k_; ++j) r.c_[k_ - j] -= c_[j];
  return r;
}

void CycNum::add_unit(int slot, long w) {
  int two_k = 2 * k_;
  int s = slot % two_k;
  if (s < 0) s += two_k;
  if (s < k_) {
    c_[s] += w;
  } else {
    c_[s - k_] -= w;
  }
}

namespace {

// Exact polynomial division r /= d for monic or +-1-leading d; remainder must
// come out zero (used only for products of cyclotomic polynomials).
std::vector<BigInt> exact_div(std::vector<BigInt> num,
                              const std::vector<BigInt>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<BigInt> q(static_cast<size_t>(dn - dd + 1));
  for (int i = dn - dd; i >= 0; --i) {
    BigInt f = num[i + dd] / den[dd];
    q[i] = f;
    if (f != 0) {
      for (int j = 0; j <= dd; ++j) num[i + j] -= f * den[j];
    }
  }
  for (const BigInt& c : num) {
    if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return q;
}

std::map<long, std::vector<BigInt>>& phi_memo() {
  static std::map<long, std::vector<BigInt>> m;
  return m;
}
std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

std::vector<BigInt> phi_locked(long m) {
  auto it = phi_memo().find(m);
  if (it != phi_memo().end()) return it->second;
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
  std::vector<BigInt> num(static_cast<size_t>(m) + 1);
  num[0] = -1;
  num[static_cast<size_t>(m)] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = exact_div(std::move(num), phi_locked(d));
  }
  phi_memo()[m] = num;
  return num;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
  std::lock_guard<std::mutex> lock(phi_mutex());
  return phi_locked(m);
}

namespace detail {

const std::vector<BigInt>& phi_2k(int k) {
  std::lock_guard<std::mutex> lock(phi_mutex());
  static std::map<int, std::vector<BigInt>> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, phi_locked(2L * k)).first;
  return it->second;
}

const SlotTables& slot_tables(int k) {
  static std::map<int, SlotTables> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(k);
  if (it == cache.end()) {
    SlotTables t;
    t.cs.resize(static_cast<size_t>(2 * k));
    t.sn.resize(static_cast<size_t>(2 * k));
    for (int j = 0; j < 2 * k; ++j) {
      double a = M_PI * j / k;
      t.cs[j] = std::cos(a);
      t.sn[j] = std::sin(a);
    }
    it = cache.emplace(k, std::move(t)).first;
  }
  return it->second;
}

}  // namespace detail

std::vector<BigInt> CycNum::reduced_key() const {
  const std::vector<BigInt>& phi = detail::phi_2k(k_);
  int deg = static_cast<int>(phi.size()) - 1;
  std::vector<BigInt> rem = c_;
  for (int i = k_ - 1; i >= deg; --i) {
    if (rem[i] == 0) continue;
    BigInt f = rem[i];  // phi is monic
    for (int j = 0; j <= deg; ++j) rem[i - deg + j] -= f * phi[j];
  }
  rem.resize(static_cast<size_t>(deg));
  return rem;
}

bool CycNum::is_zero() const {
  bool plain = true;
  for (const BigInt& v : c_) {
    if (v != 0) {
      plain = false;
      break;
    }
  }
  if (plain) return true;
  for (const BigInt& v : reduced_key()) {
    if (v != 0) return false;
  }
  return true;
}

bool CycNum::equals(const CycNum& o) const {
  if (k_ != o.k_) return false;
  return (*this - o).is_zero();
}

std::complex<double> CycNum::approx(double* abs_err) const {
  const auto& t = detail::slot_tables(k_);
  double re = 0, im = 0, s = 0;
  for (int j = 0; j < k_; ++j) {
    if (c_[j] == 0) continue;
    double cj = c_[j].convert_to<double>();
    re += cj * t.cs[j];
    im += cj * t.sn[j];
    s += std::abs(cj);
  }
  if (abs_err) {
    // Conservative bound: each term carries a few ulps from the tables and
    // the accumulation adds k rounding steps.
    *abs_err = (s + 1.0) * (k_ + 8) * std::ldexp(1.0, -48);
  }
  return {re, im};
}

double CycNum::sum_abs() const {
  double s = 0;
  for (const BigInt& v : c_) {
    if (v != 0) s += abs(v).convert_to<double>();
  }
  return s * (1.0 + 1e-9) + 1e-9;
}

namespace {

struct MpfrVal {
  mpfr_t v;
  explicit MpfrVal(int bits) { mpfr_init2(v, bits); }
  ~MpfrVal() { mpfr_clear(v); }
  MpfrVal(const MpfrVal&) = delete;
  MpfrVal& operator=(const MpfrVal&) = delete;
};

void mpfr_from_bigint(mpfr_t out, const BigInt& x) {
  std::string s = x.str();
  mpfr_set_str(out, s.c_str(), 10, MPFR_RNDN);
}

double round_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
double round_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

}  // namespace

ComplexInterval eval_interval(const CycNum& a, int bits) {
  bool all_zero = true;
  for (const BigInt& v : a.coeffs()) {
    if (v != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return ComplexInterval{0, 0, 0, 0};

  MpfrVal pi(bits + 16), theta(bits + 16), cs(bits + 16), sn(bits + 16);
  MpfrVal term(bits + 16), re(bits + 16), im(bits + 16), coef(bits + 16);
  mpfr_const_pi(pi.v, MPFR_RNDN);
  mpfr_set_zero(re.v, 1);
  mpfr_set_zero(im.v, 1);
  double sum_abs = 0;
  for (int j = 0; j < a.k(); ++j) {
    const BigInt& c = a.coeff(j);
    if (c == 0) continue;
    sum_abs += abs(c).convert_to<double>();
    mpfr_mul_si(theta.v, pi.v, j, MPFR_RNDN);
    mpfr_div_si(theta.v, theta.v, a.k(), MPFR_RNDN);
    mpfr_cos(cs.v, theta.v, MPFR_RNDN);
    mpfr_sin(sn.v, theta.v, MPFR_RNDN);
    mpfr_from_bigint(coef.v, c);
    mpfr_mul(term.v, coef.v, cs.v, MPFR_RNDN);
    mpfr_add(re.v, re.v, term.v, MPFR_RNDN);
    mpfr_mul(term.v, coef.v, sn.v, MPFR_RNDN);
    mpfr_add(im.v, im.v, term.v, MPFR_RNDN);
  }
  // Every operation above is correctly rounded at bits+16 precision; the
  // accumulated error per component is below (sum_abs+1)*(4k+16) ulps.
  double err = (sum_abs + 1.0) * (4.0 * a.k() + 16.0) * std::ldexp(1.0, -(bits + 15));
  double re_d = mpfr_get_d(re.v, MPFR_RNDN);
  double im_d = mpfr_get_d(im.v, MPFR_RNDN);
  double slack = std::max(std::abs(re_d), std::abs(im_d)) * std::ldexp(1.0, -50) +
                 std::ldexp(1.0, -1060);
  ComplexInterval box;
  box.re_lo = round_down(re_d - err - slack);
  box.re_hi = round_up(re_d + err + slack);
  box.im_lo = round_down(im_d - err - slack);
  box.im_hi = round_up(im_d + err + slack);
  return box;
}

ComplexInterval CycNum::to_float(int precision_bits) const {
  if (precision_bits < 24)
    throw std::invalid_argument("to_float: precision_bits must be >= 24");
  return eval_interval(*this, precision_bits);
}

namespace detail {

int sign_real_unchecked(const CycNum& a) {
  double err = 0;
  std::complex<double> z = a.approx(&err);
  if (z.real() > err) return 1;
  if (z.real() < -err) return -1;
  if (a.is_zero()) return 0;
  for (int bits = 64; bits <= (1 << 22); bits *= 2) {
    ComplexInterval box = eval_interval(a, bits);
    if (box.re_lo > 0) return 1;
    if (box.re_hi < 0) return -1;
  }
  throw std::logic_error("sign ladder failed to converge");
}

}  // namespace detail

int sign_real(const CycNum& a) {
  if (!(a - a.conj()).is_zero()) throw NotRealError();
  if (a.is_zero()) return 0;
  for (int bits = 64; bits <= (1 << 22); bits *= 2) {
    ComplexInterval box = eval_interval(a, bits);
    if (box.re_lo > 0) return 1;
    if (box.re_hi < 0) return -1;
  }
  throw std::logic_error("sign ladder failed to converge");
}

int sign_imag(const CycNum& a) {
  if ((a - a.conj()).is_zero()) return 0;
  double err = 0;
  std::complex<double> z = a.approx(&err);
  if (z.imag() > err) return 1;
  if (z.imag() < -err) return -1;
  for (int bits = 64; bits <= (1 << 22); bits *= 2) {
    ComplexInterval box = eval_interval(a, bits);
    if (box.im_lo > 0) return 1;
    if (box.im_hi < 0) return -1;
  }
  throw std::logic_error("sign ladder failed to converge");
}

}  // namespace kpoly
