#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hermite2/oracle.hpp"
#include "hermite2/rng.hpp"
#include "test_support.hpp"

using namespace hermite2;
using testing::fe_vec;
using testing::make_poly;
using testing::monomial;
using testing::poly_from_mask;

namespace {

// (x + w)^k by repeated multiplication.
Poly linear_power(const Field& f, Fe w, std::size_t k) {
  Poly acc = make_poly(f, {1});
  const Poly lin(f, std::vector<Fe>{w, Fe{1}});
  for (std::size_t i = 0; i < k; ++i) acc = poly_mul(acc, lin);
  return acc;
}

// Binomial parity by the Pascal recurrence, independent of the bit test.
bool pascal_binom_odd(unsigned k, unsigned i) {
  if (i > k) return false;
  std::vector<unsigned> row(k + 1, 0);
  row[0] = 1;
  for (unsigned r = 1; r <= k; ++r)
    for (unsigned c = r; c >= 1; --c) row[c] = (row[c] + row[c - 1]) % 2;
  return row[i] == 1;
}

}  // namespace

TEST_CASE("binom_odd agrees with the Pascal recurrence") {
  for (unsigned k = 0; k < 40; ++k)
    for (unsigned i = 0; i <= k; ++i) CHECK(binom_odd(k, i) == pascal_binom_odd(k, i));
}

TEST_CASE("hasse_derivative on monomials") {
  const Field f = make_field(1);
  const Poly p = make_poly(f, {1, 0, 1});
  CHECK(hasse_derivative(p, 0) == p);
  CHECK(same_polynomial(hasse_derivative(monomial(f, 3), 1), monomial(f, 2)));
  CHECK(degree(hasse_derivative(monomial(f, 5), 2)) == -1);  // binom(5,2) even
  CHECK(same_polynomial(hasse_derivative(monomial(f, 6), 2), monomial(f, 4)));
}

TEST_CASE("hasse_derivative linearity") {
  std::mt19937_64 gen(31);
  for (const int m : {1, 2, 4}) {
    const Field f(m);
    for (int t = 0; t < 40; ++t) {
      const std::size_t len = 1 + gen() % 14;
      const Poly p = random_poly(gen, f, len);
      const Poly q = random_poly(gen, f, len);
      const Fe alpha = random_element(gen, f);
      const Fe beta = random_element(gen, f);
      const std::size_t i = gen() % 6;
      const Poly combo = poly_add(poly_mul(make_poly(f, {alpha.bits}), p),
                                  poly_mul(make_poly(f, {beta.bits}), q));
      const Poly lhs = hasse_derivative(combo, i);
      const Poly rhs = poly_add(poly_mul(make_poly(f, {alpha.bits}), hasse_derivative(p, i)),
                                poly_mul(make_poly(f, {beta.bits}), hasse_derivative(q, i)));
      CHECK(same_polynomial(lhs, rhs));
    }
  }
}

TEST_CASE("derivative values are Taylor coefficients") {
  std::mt19937_64 gen(37);
  for (const int m : {1, 2, 4}) {
    const Field f(m);
    for (int t = 0; t < 40; ++t) {
      const std::size_t len = 1 + gen() % 12;
      const Poly p = random_poly(gen, f, len);
      const Fe w = random_element(gen, f);
      const Poly shifted = taylor_shift(p, w);
      for (std::size_t i = 0; i < len; ++i)
        CHECK(shifted.coeffs[i] == poly_eval(hasse_derivative(p, i), w));
    }
  }
}

TEST_CASE("vanishing derivatives match root multiplicity") {
  std::mt19937_64 gen(41);
  for (const int m : {1, 2, 3}) {
    const Field f(m);
    for (int t = 0; t < 40; ++t) {
      const Fe w = random_element(gen, f);
      const std::size_t i = 1 + gen() % 4;

      // multiple of (x+w)^i: all lower derivatives vanish at w
      const Poly mult = poly_mul(linear_power(f, w, i), random_poly(gen, f, 1 + gen() % 5));
      for (std::size_t j = 0; j < i; ++j)
        CHECK(poly_eval(hasse_derivative(mult, j), w) == Fe{0});

      // converse on a random polynomial
      const Poly p = random_poly(gen, f, 8);
      bool all_vanish = true;
      for (std::size_t j = 0; j < i; ++j)
        if (!(poly_eval(hasse_derivative(p, j), w) == Fe{0})) all_vanish = false;
      const auto [q, r] = poly_divrem(p, linear_power(f, w, i));
      CHECK(all_vanish == (degree(r) == -1));
    }
  }
}

TEST_CASE("derivative composition") {
  std::mt19937_64 gen(43);
  const Field f = make_field(2);
  for (int t = 0; t < 60; ++t) {
    const Poly p = random_poly(gen, f, 1 + gen() % 16);
    const std::size_t i = gen() % 5;
    const std::size_t j = gen() % 5;
    const Poly lhs = hasse_derivative(hasse_derivative(p, j), i);
    Poly rhs = hasse_derivative(p, i + j);
    if (!binom_odd(i + j, i)) rhs = Poly(f, rhs.length());
    CHECK(same_polynomial(lhs, rhs));
  }
}

TEST_CASE("Taylor expansion reconstructs the polynomial") {
  std::mt19937_64 gen(47);
  for (const int m : {1, 2, 4}) {
    const Field f(m);
    for (int t = 0; t < 30; ++t) {
      const std::size_t len = 1 + gen() % 10;
      const Poly p = random_poly(gen, f, len);
      const Fe w = random_element(gen, f);
      Poly sum(f, len);
      for (std::size_t i = 0; i < len; ++i) {
        const Fe di = poly_eval(hasse_derivative(p, i), w);
        sum = poly_add(sum, poly_mul(make_poly(f, {di.bits}), linear_power(f, w, i)));
      }
      CHECK(same_polynomial(sum, p));
    }
  }
}

TEST_CASE("hermite_eval_naive worked examples") {
  const Field f1 = make_field(1);
  CHECK(hermite_eval_naive(make_poly(f1, {0, 0, 0, 1}), 4) == fe_vec({0, 1, 0, 1}));

  const Field f2 = make_field(2);
  CHECK(hermite_eval_naive(make_poly(f2, {1}), 8) == fe_vec({1, 1, 1, 1, 0, 0, 0, 0}));
  CHECK(hermite_eval_naive(make_poly(f2, {3}), 1) == fe_vec({3}));  // F(w_0) with w_0 = 0

  CHECK_THROWS_AS(hermite_eval_naive(make_poly(f2, {3, 2}), 0), std::domain_error);
  CHECK_THROWS_AS(hermite_eval_naive(make_poly(f2, {1, 2, 3}), 2), std::invalid_argument);
}

TEST_CASE("hermite_interp_naive worked examples") {
  const Field f1 = make_field(1);
  const auto h = fe_vec({0, 1, 0, 1});
  CHECK(hermite_interp_naive(f1, h) == make_poly(f1, {0, 0, 0, 1}));

  const Field f2 = make_field(2);
  CHECK(hermite_interp_naive(f2, fe_vec({3})) == make_poly(f2, {3}));
  CHECK(hermite_interp_naive(f2, fe_vec({1, 1, 1, 1, 0, 0, 0, 0})) ==
        make_poly(f2, {1, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("naive round trip, exhaustive over GF(2) up to length 6") {
  const Field f = make_field(1);
  for (std::size_t len = 1; len <= 6; ++len)
    for (std::uint64_t mask = 0; mask < (1ull << len); ++mask) {
      const Poly p = poly_from_mask(f, mask, len);
      const auto h = hermite_eval_naive(p, len);
      CHECK(hermite_interp_naive(f, h) == p);
    }
}

TEST_CASE("naive round trip, random over larger fields") {
  std::mt19937_64 gen(53);
  for (const int m : {2, 3, 4}) {
    const Field f(m);
    for (int t = 0; t < 25; ++t) {
      const std::size_t len = 1 + gen() % (3 * f.order());
      const Poly p = random_poly(gen, f, len);
      const auto h = hermite_eval_naive(p, len);
      CHECK(hermite_interp_naive(f, h) == p);
    }
  }
}
