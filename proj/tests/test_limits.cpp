#include "invol/hpreal.hpp"
#include "invol/limits.hpp"

#include <doctest.h>

#include <random>

using namespace invol;

namespace {

BigRat abs_rat(const BigRat& r) { return r < 0 ? BigRat(-r) : r; }

BigRat tol(unsigned e) { return BigRat(BigInt(1), pow(BigInt(10), e)); }

BigRat distance_to(const HPReal& x, const BigRat& target) { return abs_rat(x.mid() - target) + x.err(); }

unsigned smallest_legal_q(LimitTag tag) { return limit_shape(tag).characteristic == Characteristic::Even ? 2 : 3; }

}  // namespace

TEST_SUITE("limits") {
  TEST_CASE("interval arithmetic encloses exact results") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
    for (int trial = 0; trial < 200; ++trial) {
      BigRat a(num(rng), den(rng)), b(num(rng), den(rng)), r(num(rng), den(rng));
      a.canonicalize();
      b.canonicalize();
      r.canonicalize();
      const HPReal x = HPReal::from_rational(a, 12), y = HPReal::from_rational(b, 12);
      CHECK(x.contains(a));
      CHECK((x + y).contains(a + b));
      CHECK((x - y).contains(a - b));
      CHECK((x * y).contains(a * b));
      CHECK((x * r).contains(a * r));
      CHECK(((x * y) * y).contains(a * b * b));
      if (b != 0) CHECK((x / y).contains(a / b));
    }
    CHECK_THROWS_AS(HPReal::from_rational(1, 5) / HPReal(0, 5, BigRat(1, 100000)), std::domain_error);
    CHECK_THROWS_AS(HPReal::from_rational(1, 5) + HPReal::from_rational(1, 6), std::invalid_argument);
  }

  TEST_CASE("decimal rendering") {
    HPReal x = HPReal::from_rational(BigRat(-5, 4), 6);
    CHECK(x.decimal(3) == "-1.250");
    CHECK(x.err() == 0);
    CHECK(x.err_exponent() == -7);
    CHECK(HPReal::from_rational(BigRat(1, 3), 8).decimal(4) == "0.3333");
    CHECK(HPReal(1, 4, BigRat(3, 1000)).err_exponent() == -2);
    const HPReal inside = HPReal::from_rational(BigRat(33587, 20000), 10).widened(tol(9));  // 1.67935
    CHECK(certainly_begins_with(inside, "1.6793"));
    CHECK_FALSE(certainly_begins_with(inside, "1.6792"));
    CHECK_FALSE(certainly_begins_with(inside.widened(tol(3)), "1.6793"));
    // an enclosure straddling the boundary pins no prefix
    CHECK_FALSE(certainly_begins_with(HPReal::from_rational(BigRat(16793, 10000), 10).widened(tol(9)), "1.6793"));
    CHECK(certainly_begins_with(HPReal::from_rational(BigRat(-33587, 20000), 10), "-1.6793"));
  }

  TEST_CASE("products") {
    HPReal trivial = hp_product(0, BigRat(1, 2), ProductSign::Plus, 30);
    CHECK(trivial.mid() == 1);
    CHECK(trivial.err() == 0);
    HPReal euler = hp_product(1, BigRat(1, 4), ProductSign::Minus, 30);
    CHECK(certainly_begins_with(euler, "0.6885375371"));
    CHECK(euler.err() < tol(30));
    HPReal plus = hp_product(1, BigRat(1, 4), ProductSign::Plus, 30);
    HPReal four = hp_product(1, BigRat(1, 16), ProductSign::Minus, 30);
    CHECK(certainly_consistent(plus * euler, four));
    CHECK(distance_to(plus * euler, four.mid()) < tol(29));
    CHECK_THROWS_AS(hp_product(1, 1, ProductSign::Plus, 30), std::domain_error);
    CHECK_THROWS_AS(hp_product(1, BigRat(-3, 2), ProductSign::Plus, 30), std::domain_error);
    // negative bases
    HPReal alt = hp_product(1, BigRat(-1, 3), ProductSign::Minus, 20);
    CHECK(alt.contains(alt.mid()));
    CHECK(certainly_consistent(alt * hp_product(1, BigRat(-1, 3), ProductSign::Plus, 20),
                               hp_product(1, BigRat(1, 9), ProductSign::Minus, 20)));
  }

  TEST_CASE("square roots") {
    HPReal two = hp_sqrt(4, 20);
    CHECK(two.mid() == 2);
    CHECK(two.err() == 0);
    HPReal three_halves = hp_sqrt(BigRat(9, 4), 20);
    CHECK(three_halves.mid() == BigRat(3, 2));
    CHECK(three_halves.err() == 0);
    HPReal r2 = hp_sqrt(2, 25);
    CHECK(certainly_begins_with(r2, "1.41421356237309504880"));
    CHECK(r2.err() < tol(30));
    HPReal sq = r2 * r2;
    CHECK(sq.contains(2));
    CHECK_THROWS_AS(hp_sqrt(0, 20), std::domain_error);
    CHECK_THROWS_AS(hp_sqrt(-1, 20), std::domain_error);
  }

  TEST_CASE("printed constants and sanity bound") {
    CHECK(certainly_begins_with(limit_constant({LimitTag::GlEvenQEvenN, 2}, 10), "1.6793"));
    CHECK(certainly_begins_with(limit_constant({LimitTag::SpEvenQ, 2}, 10), "1.3559"));
    CHECK(certainly_begins_with(limit_constant({LimitTag::OOddDimOddQ, 3}, 10), "2.5382"));
    HPReal gl = limit_constant({LimitTag::GlEvenQEvenN, 2}, 30);
    CHECK(gl.lower() > BigRat(3, 4));
    CHECK(gl.upper() < BigRat(5, 2));
  }

  TEST_CASE("tag names and shapes") {
    CHECK(all_limit_tags().size() == 14);
    for (LimitTag t : all_limit_tags()) CHECK(parse_limit_tag(limit_tag_name(t)) == t);
    CHECK_FALSE(parse_limit_tag("gl").has_value());
    unsigned single = 0;
    for (LimitTag t : all_limit_tags())
      if (!limit_shape(t).two_forms) ++single;
    CHECK(single == 4);
  }

  TEST_CASE("both forms agree, also at a non-integral q") {
    for (LimitTag t : all_limit_tags())
      for (const char* qs : {"2", "3", "7/2"}) {
        const LimitCase c{t, parse_rational(qs)};
        HPReal a = limit_constant(c, 30), b = limit_constant_alt(c, 30);
        CAPTURE(limit_tag_name(t));
        CAPTURE(qs);
        CHECK(certainly_consistent(a, b));
        CHECK(abs_rat(a.mid() - b.mid()) + a.err() + b.err() < tol(25));
        if (!limit_shape(t).two_forms) CHECK(a.mid() == b.mid());
      }
  }

  TEST_CASE("invalid limit requests") {
    CHECK_THROWS_AS(limit_constant({LimitTag::SpEvenQ, 1}, 30), std::domain_error);
    CHECK_THROWS_AS(limit_constant_alt({LimitTag::SpEvenQ, BigRat(1, 2)}, 30), std::domain_error);
    CHECK_THROWS_AS(limit_constant({LimitTag::SpEvenQ, 2}, 5), std::invalid_argument);
  }

  TEST_CASE("triple product") {
    HPReal zero = jtp_F(-1, BigRat(1, 4), 30);
    CHECK(zero.mid() == 0);
    CHECK(zero.err() == 0);
    CHECK_THROWS_AS(jtp_F(0, BigRat(1, 4), 30), std::domain_error);
    CHECK_THROWS_AS(jtp_F(1, 2, 30), std::domain_error);
    const std::pair<BigRat, BigRat> points[] = {
        {BigRat(1, 2), BigRat(1, 4)}, {BigRat(1, 3), BigRat(1, 5)}, {BigRat(2, 3), BigRat(1, 7)}, {5, BigRat(1, 3)}};
    for (const auto& [x, r] : points) {
      HPReal p = jtp_F_product(x, r, 25), s = jtp_F_series(x, r, 25);
      CHECK(certainly_consistent(p, s));
      CHECK(abs_rat(p.mid() - s.mid()) + p.err() + s.err() < tol(25));
    }
  }

  TEST_CASE("sieve identities") {
    for (auto [x, r] : {std::pair<BigRat, BigRat>{BigRat(1, 2), BigRat(1, 4)}, {BigRat(1, 3), BigRat(1, 5)},
                        {BigRat(2, 3), BigRat(1, 7)}}) {
      SieveCheck s = sieve_check(x, r, 30);
      CHECK(s.even_gap < tol(25));
      CHECK(s.odd_gap < tol(25));
    }
  }

  TEST_CASE("convergence reports") {
    std::vector<unsigned> even_n;
    for (unsigned n = 2; n <= 20; n += 2) even_n.push_back(n);
    ConvergenceReport gl = convergence_report({LimitTag::GlEvenQEvenN, 2}, even_n);
    CHECK(gl.rows.size() == 10);
    CHECK(gl.strictly_decreasing());
    CHECK(gl.rows.front().ratio == 1);

    std::vector<unsigned> all_n;
    for (unsigned n = 1; n <= 15; ++n) all_n.push_back(n);
    ConvergenceReport sp = convergence_report({LimitTag::SpEvenQ, 2}, all_n);
    CHECK(sp.rows.front().n == 1);
    CHECK(sp.rows.front().ratio == 1);
    CHECK(sp.rows.back().dist_upper < BigRat(1, 100));
    CHECK(sp.strictly_decreasing());

    ConvergenceReport ominus = convergence_report({LimitTag::OPmEvenQ, 2}, {1, 2, 3, 4, 5, 6, 7, 8}, 30, Family::OMinus);
    CHECK(ominus.family == Family::OMinus);
    CHECK(ominus.rows.back().dist_upper < ominus.rows.front().dist_lower);

    CHECK_THROWS_AS(convergence_report({LimitTag::GlEvenQEvenN, 2}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(convergence_report({LimitTag::GlEvenQEvenN, 3}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(convergence_report({LimitTag::GlEvenQEvenN, 6}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(convergence_report({LimitTag::SpEvenQ, 2}, {1}, 30, Family::GL), std::invalid_argument);
  }

  TEST_CASE("large q trend") {
    for (LimitTag t : all_limit_tags()) {
      CAPTURE(limit_tag_name(t));
      const BigRat target = limit_shape(t).q_infinity_value;
      const BigRat far = distance_to(limit_constant({t, 101}, 30), target);
      const BigRat near = distance_to(limit_constant({t, smallest_legal_q(t)}, 30), target);
      CHECK(far < BigRat(1, 10));
      if (t != LimitTag::UOddQEvenN) CHECK(far < near);
    }
  }

  TEST_CASE("u-odd-q-even-n is already closer to 1 at q = 3 than at q = 101") {
    // the constant crosses 1 between q = 3 and q = 4, so closeness is not monotone in q
    const HPReal at3 = limit_constant({LimitTag::UOddQEvenN, 3}, 30);
    const HPReal at4 = limit_constant({LimitTag::UOddQEvenN, 4}, 30);
    const HPReal at101 = limit_constant({LimitTag::UOddQEvenN, 101}, 30);
    CHECK(at3.lower() > 1);
    CHECK(at4.upper() < 1);
    CHECK(distance_to(at3, 1) < abs_rat(at101.mid() - 1) - at101.err());
  }

  TEST_CASE("gl even-q constants decrease in q") {
    for (LimitTag t : {LimitTag::GlEvenQEvenN, LimitTag::GlEvenQOddN}) {
      HPReal prev = limit_constant({t, 2}, 30);
      for (long q : {4, 8, 16, 32}) {
        HPReal cur = limit_constant({t, q}, 30);
        CHECK(cur.upper() < prev.lower());
        CHECK(cur.lower() > 1);
        prev = cur;
      }
    }
  }
}
