#include "cyclotomic.hpp"

#include <doctest.h>

#include <random>

using namespace kpoly;

namespace {

CycNum from_coeffs(int k, std::initializer_list<long> cs) {
  CycNum a(k);
  int j = 0;
  for (long c : cs) a.coeff(j++) = c;
  return a;
}

CycNum random_elem(std::mt19937& rng, int k) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  CycNum a(k);
  for (int j = 0; j < k; ++j) a.coeff(j) = coeff(rng);
  return a;
}

}  // namespace

TEST_CASE("cyclotomic polynomials by exact division") {
  CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<BigInt>{1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<BigInt>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
  // degree of Phi_m is Euler's totient of m
  CHECK(cyclotomic_polynomial(30).size() == 9);
  CHECK(cyclotomic_polynomial(36).size() == 13);
}

TEST_CASE("is_zero decides exact equality") {
  CHECK(CycNum(4).is_zero());
  CHECK_FALSE(from_coeffs(4, {1}).is_zero());
  // zeta = exp(i*pi/6): zeta^2 - zeta^4 - 1 = 0 because zeta^2 is a primitive
  // sixth root of unity (checked numerically first, then symbolically).
  CycNum a = from_coeffs(6, {-1, 0, 1, 0, -1, 0});
  double err = 0;
  auto z = a.approx(&err);
  CHECK(std::abs(z) <= err + 1e-12);
  CHECK(a.is_zero());

  // x^k + 1 is not minimal for k = 6: representations differ, values match.
  CycNum b = from_coeffs(6, {0, 0, 1, 0, -1, 0});  // zeta^2 - zeta^4
  CycNum c = from_coeffs(6, {1, 0, 0, 0, 0, 0});   // 1
  CHECK(b.equals(c));
  CHECK_FALSE(b.coeffs() == c.coeffs());
}

TEST_CASE("zero-test faithfulness against the minimal polynomial") {
  for (int k = 3; k <= 16; ++k) {
    auto phi = cyclotomic_polynomial(2L * k);
    CycNum r(k);
    for (int j = 0; j < static_cast<int>(phi.size()); ++j) {
      long cj = phi[static_cast<size_t>(j)].convert_to<long>();
      if (cj != 0) r.add_unit(j % (2 * k), cj);
    }
    CAPTURE(k);
    CHECK(r.is_zero());
    CHECK_FALSE((r + CycNum::integer(k, 1)).is_zero());
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    int k = 3 + static_cast<int>(rng() % 22);
    CycNum a = random_elem(rng, k), b = random_elem(rng, k), c = random_elem(rng, k);
    CHECK(((a + b) + c).equals(a + (b + c)));
    CHECK((a + b).equals(b + a));
    CHECK(((a * b) * c).equals(a * (b * c)));
    CHECK((a * (b + c)).equals(a * b + a * c));
    CHECK((a - a).is_zero());
    CHECK((a * b).conj().equals(a.conj() * b.conj()));
    int d = static_cast<int>(rng() % (2 * k));
    CHECK(a.shifted(d).equals(a * CycNum::unit(k, d)));
    // 2k single shifts return the element: zeta^(2k) = 1
    CycNum s = a;
    for (int i = 0; i < 2 * k; ++i) s = s.shifted(1);
    CHECK(s.coeffs() == a.coeffs());
  }
}

TEST_CASE("sign_real on known values") {
  CHECK(sign_real(CycNum(5)) == 0);
  // 2cos(pi/6) = sqrt(3) > 0
  CycNum sqrt3 = CycNum::unit(6, 1) + CycNum::unit(6, 11);
  CHECK(sign_real(sqrt3) == 1);
  // 2cos(2pi/5) - 1 is about -0.382
  CycNum a = CycNum::unit(5, 2) + CycNum::unit(5, 8) - CycNum::unit(5, 0);
  CHECK(sign_real(a) == -1);
  CHECK_THROWS_AS(sign_real(CycNum::unit(4, 1)), NotRealError);
}

TEST_CASE("sign_real soundness against 128-bit intervals") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int k = 3 + static_cast<int>(rng() % 14);
    CycNum b = random_elem(rng, k);
    CycNum a = b + b.conj();  // real by construction
    if (a.is_zero()) continue;
    ComplexInterval box = eval_interval(a, 128);
    if (box.re_lo > 0 || box.re_hi < 0) {
      ++checked;
      CHECK(sign_real(a) == (box.re_lo > 0 ? 1 : -1));
    }
  }
  CHECK(checked > 900);
}

TEST_CASE("to_float returns enclosing boxes") {
  CycNum zero(5);
  ComplexInterval z = zero.to_float(64);
  CHECK(z.width() == 0.0);
  CHECK(z.contains({0, 0}));

  ComplexInterval one = CycNum::unit(4, 0).to_float(64);
  CHECK(one.contains({1, 0}));
  CHECK(one.width() < 1e-12);

  ComplexInterval z3 = CycNum::unit(3, 1).to_float(64);
  CHECK(z3.contains({0.5, 0.8660254037844386}));

  // widths shrink (or stay put) as precision grows
  CycNum a = CycNum::unit(7, 1) + CycNum::unit(7, 3) - CycNum::unit(7, 6);
  double w24 = a.to_float(24).width();
  double w48 = a.to_float(48).width();
  CHECK(w48 <= w24);
  CHECK(w24 < 1e-3);
  CHECK_THROWS_AS(a.to_float(8), std::invalid_argument);
}

TEST_CASE("sign_imag") {
  CHECK(sign_imag(CycNum::integer(6, 3)) == 0);
  CHECK(sign_imag(CycNum::unit(6, 1)) == 1);
  CHECK(sign_imag(CycNum::unit(6, 11)) == -1);
}
