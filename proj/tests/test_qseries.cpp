#include "invol/qseries.hpp"

#include <doctest.h>

#include <random>

using namespace invol;

namespace {

const BigRat kQ(2);

USeries poly(std::vector<BigRat> c, unsigned order) {
  USeries s(order, kQ);
  for (unsigned i = 0; i < c.size() && i <= order; ++i) s.set(i, c[i]);
  return s;
}

// Every denominator must divide q^200 * prod_{k<=12} (q^k - 1).
bool audited_denominator(const BigInt& den, unsigned q) {
  BigInt bound = pow(BigInt(q), 200UL);
  for (unsigned k = 1; k <= 12; ++k) bound *= pow(BigInt(q), k) - 1;
  return mpz_divisible_p(bound.get_mpz_t(), den.get_mpz_t()) != 0;
}

}  // namespace

TEST_SUITE("qseries") {
  TEST_CASE("truncated ring operations") {
    CHECK(poly({1, 1}, 2) * poly({1, -1}, 2) == poly({1, 0, -1}, 2));
    CHECK(USeries::geometric(1, 1, 3, kQ) == poly({1, 1, 1, 1}, 3));
    CHECK(USeries::monomial(1, 3, 3, kQ) * poly({0, 1}, 3) == USeries(3, kQ));
    CHECK(series_shift(poly({1, 2, 3}, 3), 2) == poly({0, 0, 1, 2}, 3));
    CHECK(series_scale(poly({1, 2}, 1), BigRat(1, 2)) == poly({BigRat(1, 2), 1}, 1));
    CHECK_THROWS_AS(poly({1}, 2) + poly({1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(poly({1}, 2) * USeries(2, BigRat(3)), std::invalid_argument);
  }

  TEST_CASE("finite pochhammer") {
    CHECK(poch(BigRat(1, 2), BigRat(1, 3), 0) == 1);
    CHECK(poch(BigRat(1, 2), BigRat(1, 3), 2) == BigRat(1, 2) * BigRat(5, 6));
    for (unsigned n = 0; n < 6; ++n)
      CHECK(poch(BigRat(2, 5), 3, n + 1) == poch(BigRat(2, 5), 3, n) * (1 - BigRat(2, 5) * pow(BigRat(3), long(n))));
  }

  TEST_CASE("euler expansion examples") {
    for (const char* qs : {"2", "3", "7/2"}) {
      const BigRat q = parse_rational(qs);
      CHECK(euler_expand(0, 1, 1 / q, EulerSign::Product, 5, q) == USeries::one(5, q));
      CHECK(euler_expand(1 / q, 1, 1 / q, EulerSign::Product, 5, q)[1] == 1 / (q - 1));
      auto r = euler_expand(1 / q, 2, 1 / q, EulerSign::Reciprocal, 5, q);
      CHECK(r[1] == 0);
      CHECK(r[2] == 1 / (q - 1));
    }
    CHECK_THROWS_AS(euler_expand(1, 1, 1, EulerSign::Product, 4, kQ), std::invalid_argument);
    CHECK_THROWS_AS(euler_expand(1, 1, BigRat(-3, 2), EulerSign::Product, 4, kQ), std::invalid_argument);
  }

  TEST_CASE("euler product times reciprocal is one") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-9, 9), den(2, 12);
    for (int trial = 0; trial < 25; ++trial) {
      BigRat c(num(rng), den(rng));
      c.canonicalize();
      BigRat Q(num(rng), den(rng) + 10);
      Q.canonicalize();
      const unsigned m = 1 + trial % 3;
      auto minus_product = euler_expand(-c, m, Q, EulerSign::Product, 12, kQ);
      auto reciprocal = euler_expand(c, m, Q, EulerSign::Reciprocal, 12, kQ);
      CHECK(minus_product * reciprocal == USeries::one(12, kQ));
    }
  }

  TEST_CASE("denominators only contain q^k - 1 factors") {
    for (unsigned q : {2u, 3u, 5u}) {
      for (auto sign : {EulerSign::Product, EulerSign::Reciprocal}) {
        auto s = euler_expand(1, 1, BigRat(1, q), sign, 12, BigRat(q));
        for (const auto& c : s.coeffs()) {
          CHECK(c > 0);
          CHECK(audited_denominator(c.get_den(), q));
        }
      }
    }
  }

  TEST_CASE("H lemma") {
    auto h = H_series(1, 1, 2, 6);
    CHECK(h.lhs[0] == 1);
    CHECK(h.rhs[0] == 1);
    CHECK(h.lhs[1] == 2);
    CHECK(h.rhs[1] == 2);
    auto h0 = H_series(1, 0, 3, 6);
    CHECK(h0.rhs == euler_expand(BigRat(1, 3), 1, BigRat(1, 3), EulerSign::Product, 6, 3));
    CHECK(h0.lhs == h0.rhs);
    CHECK_THROWS_AS(H_series(1, 1, 1, 6), std::invalid_argument);
  }

  TEST_CASE("G lemma") {
    auto g0 = G_series(1, 0, 3, 2, 0, 6);
    CHECK(g0.rhs == euler_expand(BigRat(1, 3), 1, BigRat(1, 3), EulerSign::Product, 6, 3));
    CHECK(g0.lhs == g0.rhs);
    auto g = G_series(1, 1, 2, 2, 0, 6);
    CHECK(g.lhs[1] == g.rhs[1]);
    CHECK(g.lhs[0] == 1);
    auto g1 = G_series(1, 1, 2, 2, 1, 6);
    CHECK(g1.lhs[0] == 0);
    CHECK(g1.rhs[0] == 0);
    CHECK_THROWS_AS(G_series(1, 1, 2, 3, 0, 6), std::invalid_argument);
  }

  TEST_CASE("lemma grids hold to degree 12") {
    const std::pair<int, int> samples[] = {{1, 1}, {1, 2}, {2, 3}};
    for (const char* qs : {"2", "3", "5", "7/2"}) {
      const BigRat q = parse_rational(qs);
      for (auto [a, b] : samples) {
        auto h = H_series(a, b, q, 12);
        CHECK(h.lhs == h.rhs);
        for (unsigned t : {0u, 1u, 2u}) {
          auto g = G_series(a, b, q, 2, t, 12);
          CHECK(g.lhs == g.rhs);
        }
      }
    }
  }
}
