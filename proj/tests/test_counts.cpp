#include "invol/counts.hpp"

#include <doctest.h>

using namespace invol;

TEST_SUITE("counts") {
  TEST_CASE("small counts") {
    CHECK(count_involutions({Family::GL, 2, 2}) == 4);
    CHECK(count_involutions({Family::GL, 2, 3}) == 14);
    CHECK(count_involutions({Family::Sp, 2, 2}) == 4);
    CHECK(count_involutions({Family::OMinus, 2, 2}) == 4);
    CHECK(count_involutions({Family::U, 3, 2}) == 10);
    CHECK(count_involutions({Family::GL, 1, 2}) == 1);
    CHECK(count_involutions({Family::OOdd, 1, 3}) == 2);
    CHECK_THROWS_AS(count_involutions({Family::OOdd, 3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(count_involutions({Family::Sp, 3, 3}), std::invalid_argument);
  }

  TEST_CASE("terms of the GL count at q = 3") {
    auto terms = involution_summands(Family::GL, 2, 3, Characteristic::Odd);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].value == 1);
    CHECK(terms[1].value == 12);
    CHECK(terms[2].value == 1);
  }

  TEST_CASE("terms are non-negative and partial sums grow") {
    for (Family fam : {Family::GL, Family::U, Family::Sp, Family::OPlus, Family::OMinus, Family::OOdd})
      for (Characteristic ch : {Characteristic::Even, Characteristic::Odd}) {
        if (fam == Family::OOdd && ch == Characteristic::Even) continue;
        for (const char* qs : {"2", "3", "7/2"})
          for (unsigned n = 0; n <= 6; ++n) {
            const unsigned dim = matrix_dim(fam, n);
            if (fam == Family::OMinus && dim == 0) continue;
            BigRat partial = 0;
            for (const auto& t : involution_summands(fam, dim, parse_rational(qs), ch)) {
              CHECK(t.value >= 0);
              partial += t.value;
            }
            CHECK(partial >= 1);
          }
      }
  }

  TEST_CASE("the only zero term is the O-(0) convention") {
    for (unsigned n = 1; n <= 5; ++n)
      for (Family fam : {Family::OPlus, Family::OMinus, Family::OOdd})
        for (const auto& t : involution_summands(fam, matrix_dim(fam, n), 3, Characteristic::Odd))
          if (t.value == 0) CHECK((t.r == 0 || t.r == matrix_dim(fam, n)));
  }

  TEST_CASE("unitary counts are the GL formula at -q") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u})
      for (unsigned n = 1; n <= 8; ++n) {
        const Characteristic ch = characteristic_of(q);
        CHECK(BigRat(count_involutions({Family::U, n, q})) == involution_formula(Family::GL, n, -BigRat(q), ch));
      }
  }

  TEST_CASE("the two odd-characteristic orthogonal sums agree") {
    // for O^- the two sums are equal; for both types they add up to the count
    for (Family fam : {Family::OPlus, Family::OMinus})
      for (unsigned q : {3u, 5u, 7u})
        for (unsigned n = 1; n <= 6; ++n) {
          BigRat first = 0, second = 0;
          for (const auto& t : involution_summands(fam, 2 * n, q, Characteristic::Odd))
            (t.part == '1' ? first : second) += t.value;
          if (fam == Family::OMinus) CHECK(first == second);
          CHECK(first + second == BigRat(count_involutions({fam, 2 * n, q})));
        }
  }

  TEST_CASE("normalization exponents") {
    CHECK(normalization_exponent(Family::GL, 4, Characteristic::Even) == 8);
    CHECK(normalization_exponent(Family::GL, 5, Characteristic::Odd) == 12);
    CHECK(normalization_exponent(Family::Sp, 6, Characteristic::Odd) == 8);
    CHECK(normalization_exponent(Family::Sp, 4, Characteristic::Odd) == 4);
    CHECK(normalization_exponent(Family::Sp, 6, Characteristic::Even) == 12);
    CHECK(normalization_exponent(Family::OOdd, 5, Characteristic::Odd) == 6);
    CHECK(normalization_exponent(Family::OMinus, 6, Characteristic::Even) == 9);
    CHECK(normalization_exponent(GroupId{Family::U, 3, 2}) == 4);
  }

  TEST_CASE("ratio tables") {
    auto gl = ratio_table(Family::GL, 2, Characteristic::Even, 4);
    REQUIRE(gl.size() == 4);
    CHECK(gl[0].value == 1);
    CHECK(gl[0].exponent == 0);
    CHECK(gl[1].value == 1);
    auto sp = ratio_table(Family::Sp, 2, Characteristic::Even, 2);
    CHECK(sp[0].value == 1);
    CHECK(sp[1].value == BigRat(19, 16));
    auto even = ratio_table(Family::GL, 3, Characteristic::Odd, 7, ParityFilter::Even);
    REQUIRE(even.size() == 3);
    CHECK(even[2].n == 6);
    CHECK(ratio_table(Family::GL, 3, Characteristic::Odd, 7, ParityFilter::Odd).size() == 4);
    CHECK_THROWS_AS(ratio_table(Family::GL, 3, Characteristic::Odd, 0), std::invalid_argument);
  }
}
