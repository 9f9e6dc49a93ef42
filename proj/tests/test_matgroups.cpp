#include "invol/matgroups.hpp"

#include <doctest.h>

#include <set>

using namespace invol;

namespace {

MatFq mat(unsigned q, unsigned dim, std::vector<std::uint8_t> codes) {
  return MatFq::from_codes(fq_field_of_size(q), dim, std::move(codes));
}

std::vector<MatFq> members(const GroupId& g) {
  const FieldDesc& f = ambient_field(g);
  const std::uint64_t space = oracle_space_size(g).get_ui();
  std::vector<MatFq> out;
  for (std::uint64_t i = 0; i < space; ++i) {
    MatFq m = MatFq::from_index(f, g.dim, i);
    if (is_member(g, m)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_SUITE("matgroups") {
  TEST_CASE("validation") {
    CHECK_NOTHROW(validate({Family::Sp, 4, 3}));
    CHECK_THROWS_AS(validate({Family::Sp, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(validate({Family::GL, 2, 6}), std::invalid_argument);
    CHECK_THROWS_AS(validate({Family::OOdd, 4, 3}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate({Family::OOdd, 3, 4}), doctest::Contains("isomorphic to symplectic; unsupported"),
                         std::invalid_argument);
    CHECK(parse_family("o-minus") == Family::OMinus);
    CHECK_FALSE(parse_family("so").has_value());
  }

  TEST_CASE("odometer indexing") {
    const auto& f = fq_field_of_size(3);
    MatFq m = MatFq::from_index(f, 2, 1 + 2 * 3 + 1 * 27);
    CHECK(m.at(0, 0).code() == 1);
    CHECK(m.at(0, 1).code() == 2);
    CHECK(m.at(1, 0).code() == 0);
    CHECK(m.at(1, 1).code() == 1);
    CHECK(m.index() == 1 + 2 * 3 + 1 * 27);
  }

  TEST_CASE("canonical forms") {
    FormSpec sp = canonical_form({Family::Sp, 2, 3});
    CHECK(sp.kind == FormKind::Symplectic);
    CHECK(*sp.gram == mat(3, 2, {0, 1, 2, 0}));

    FormSpec om3 = canonical_form({Family::OMinus, 2, 3});
    CHECK(*om3.quad == mat(3, 2, {1, 0, 0, 1}));  // x^2 + y^2
    FormSpec om2 = canonical_form({Family::OMinus, 2, 2});
    CHECK(*om2.quad == mat(2, 2, {1, 1, 0, 1}));  // x^2 + xy + y^2

    FormSpec op = canonical_form({Family::OPlus, 4, 5});
    CHECK(*op.quad == mat(5, 4, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}));
    CHECK(*op.gram == mat(5, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}));

    FormSpec u = canonical_form({Family::U, 2, 2});
    CHECK(u.kind == FormKind::Hermitian);
    CHECK(*u.gram == MatFq::identity(fq_field_of_size(4), 2));

    CHECK(canonical_form({Family::GL, 2, 2}).kind == FormKind::None);
    CHECK_THROWS_AS(canonical_form({Family::OOdd, 3, 2}), std::invalid_argument);
  }

  TEST_CASE("minus-type blocks are anisotropic in both models") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
      for (FormVariant v : {FormVariant::Canonical, FormVariant::Alternate}) {
        FormSpec form = canonical_form({Family::OMinus, 2, q}, v);
        const auto& f = fq_field_of_size(q);
        for (unsigned x = 0; x < q; ++x)
          for (unsigned y = 0; y < q; ++y) {
            if (!x && !y) continue;
            std::vector<FqElem> vec = {FqElem(f, x), FqElem(f, y)};
            CHECK_FALSE(quadratic_value(form, vec).is_zero());
          }
      }
  }

  TEST_CASE("membership examples") {
    for (GroupId g : {GroupId{Family::GL, 3, 2}, GroupId{Family::U, 2, 3}, GroupId{Family::Sp, 4, 5},
                      GroupId{Family::OPlus, 4, 4}, GroupId{Family::OMinus, 2, 9}, GroupId{Family::OOdd, 3, 7}})
      CHECK(is_member(g, MatFq::identity(ambient_field(g), g.dim)));
    CHECK(is_member({Family::Sp, 2, 2}, mat(2, 2, {1, 1, 0, 1})));
    CHECK(is_member({Family::OMinus, 2, 3}, mat(3, 2, {0, 1, 1, 0})));
    CHECK_FALSE(is_member({Family::GL, 2, 2}, mat(2, 2, {1, 1, 1, 1})));
    CHECK_THROWS_AS(is_member({Family::GL, 3, 2}, mat(2, 2, {1, 0, 0, 1})), std::invalid_argument);
  }

  TEST_CASE("order formulas") {
    CHECK(group_order({Family::GL, 2, 2}) == 6);
    CHECK(group_order({Family::Sp, 2, 2}) == 6);
    CHECK(group_order({Family::OPlus, 2, 3}) == 4);
    CHECK(group_order({Family::OMinus, 2, 3}) == 8);
    CHECK(group_order({Family::OOdd, 1, 3}) == 2);
    CHECK(group_order({Family::U, 2, 2}) == 18);
    CHECK(group_order({Family::Sp, 4, 3}) == 51840);
    CHECK(order_formula(Family::GL, 0, 5) == 1);
    CHECK(order_formula(Family::OPlus, 0, 5) == 1);
    CHECK(reciprocal_order(Family::OMinus, 0, 3) == 0);
    CHECK_THROWS_WITH_AS(order_formula(Family::OMinus, 0, 3), doctest::Contains("reciprocal is zero"),
                         std::domain_error);
    // |O(2n+1)| = 2|Sp(2n)| and the unitary formula is GL at -q up to sign
    CHECK(order_formula(Family::OOdd, 5, BigRat(7, 2)) == 2 * order_formula(Family::Sp, 4, BigRat(7, 2)));
    CHECK(order_formula(Family::U, 3, 3) == -order_formula(Family::GL, 3, -3));
  }

  TEST_CASE("oracle examples") {
    CHECK(oracle_census({Family::GL, 2, 2}) == Census{6, 4});
    CHECK(oracle_census({Family::Sp, 2, 3}) == Census{24, 2});
    CHECK(oracle_census({Family::U, 2, 2}) == Census{18, 4});
    CHECK(oracle_census({Family::GL, 0, 2}) == Census{1, 1});
    OracleOptions tight;
    tight.budget = 1000;
    try {
      oracle_census({Family::Sp, 4, 3}, tight);
      FAIL("expected an infeasible oracle");
    } catch (const OracleInfeasible& e) {
      CHECK(e.required() == 43046721);
      CHECK(std::string(e.what()).find("oracle infeasible at this size") != std::string::npos);
    }
  }

  TEST_CASE("membership sets are groups") {
    for (GroupId g : {GroupId{Family::GL, 2, 2}, GroupId{Family::GL, 2, 3}, GroupId{Family::Sp, 2, 2},
                      GroupId{Family::Sp, 2, 3}, GroupId{Family::OPlus, 2, 2}, GroupId{Family::OPlus, 2, 3},
                      GroupId{Family::OMinus, 2, 2}, GroupId{Family::OMinus, 2, 3}, GroupId{Family::U, 2, 2}}) {
      CAPTURE(static_cast<int>(g.family));
      CAPTURE(g.q);
      const auto elems = members(g);
      std::set<std::uint64_t> index;
      for (const auto& m : elems) index.insert(m.index());
      const MatFq id = MatFq::identity(ambient_field(g), g.dim);
      CHECK(index.count(id.index()) == 1);
      bool closed = true, inverses = true;
      for (const auto& a : elems) {
        bool has_inverse = false;
        for (const auto& b : elems) {
          const MatFq ab = a * b;
          closed = closed && index.count(ab.index()) == 1;
          has_inverse = has_inverse || ab == id;
        }
        inverses = inverses && has_inverse;
      }
      CHECK(closed);
      CHECK(inverses);
      CHECK(BigInt(elems.size()) == group_order(g));
    }
  }

  TEST_CASE("unitary members lie in GL over the quadratic extension") {
    for (GroupId g : {GroupId{Family::U, 2, 2}, GroupId{Family::U, 2, 3}}) {
      const GroupId gl{Family::GL, g.dim, g.q * g.q};
      for (const auto& m : members(g)) {
        REQUIRE(is_member(gl, m));
        CHECK(conjugate(transpose(m)) * m == MatFq::identity(ambient_field(g), g.dim));
      }
    }
  }

  TEST_CASE("census does not depend on the anisotropic model") {
    for (GroupId g : {GroupId{Family::OMinus, 2, 3}, GroupId{Family::OMinus, 2, 4}, GroupId{Family::OMinus, 2, 5},
                      GroupId{Family::OMinus, 4, 3}, GroupId{Family::OOdd, 3, 3}, GroupId{Family::OOdd, 3, 5}}) {
      CAPTURE(g.dim);
      CAPTURE(g.q);
      REQUIRE_FALSE(*canonical_form(g).quad == *canonical_form(g, FormVariant::Alternate).quad);
      OracleOptions alt;
      alt.variant = FormVariant::Alternate;
      CHECK(oracle_census(g) == oracle_census(g, alt));
    }
  }

  TEST_CASE("census is independent of the partition") {
    const GroupId g{Family::Sp, 2, 5};
    const Census whole = oracle_census(g);
    for (unsigned threads : {1u, 2u, 3u})
      for (unsigned chunks : {1u, 5u, 17u}) {
        OracleOptions o;
        o.threads = threads;
        o.chunks = chunks;
        CHECK(oracle_census(g, o) == whole);
      }
    const FormSpec form = canonical_form(g);
    const std::uint64_t space = oracle_space_size(g).get_ui();
    Census sum{0, 0};
    for (std::uint64_t begin = 0; begin < space; begin += 1013) {
      Census part = oracle_scan_range(g, form, begin, std::min(space, begin + 1013));
      sum.order += part.order;
      sum.involutions += part.involutions;
    }
    CHECK(sum == whole);
  }
}
