#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cyclow/field.hpp"
#include "cyclow/fpoly.hpp"

using namespace cyclow;

TEST_SUITE("field") {

TEST_CASE("default moduli are the expected primitive polynomials") {
  CHECK(Field(2, 1).modulus() == FpPoly(2, {1, 1}));
  CHECK(Field(2, 2).modulus() == FpPoly(2, {1, 1, 1}));
  CHECK(Field(2, 3).modulus() == FpPoly(2, {1, 1, 0, 1}));
  CHECK(Field(2, 4).modulus() == FpPoly(2, {1, 1, 0, 0, 1}));
  CHECK(Field(2, 5).modulus() == FpPoly(2, {1, 0, 1, 0, 0, 1}));
  CHECK(Field(3, 2).modulus() == FpPoly(3, {2, 1, 1}));
  CHECK(Field(5, 2).modulus() == FpPoly(5, {2, 1, 1}));
  CHECK(Field(3, 1).modulus() == FpPoly(3, {1, 1}));
  CHECK(Field(7, 1).modulus() == FpPoly(7, {2, 1}));  // x + 2: -2 = 5 generates GF(7)*
}

TEST_CASE("log/exp tables satisfy the group laws") {
  const Field f(2, 4);
  REQUIRE(f.has_tables());
  CHECK(f.exp(0) == 1);
  CHECK(f.exp(1) == f.generator_repr());
  // gamma^4 = gamma + 1 under x^4 + x + 1
  CHECK(f.exp(4) == f.add(f.generator_repr(), 1));
  CHECK(f.log(f.add(f.generator_repr(), 1)) == 4);

  std::vector<bool> seen(f.order(), false);
  for (std::int64_t i = 0; i < 15; ++i) {
    const Field::Repr e = f.exp(i);
    CHECK_FALSE(seen[e]);
    seen[e] = true;
    CHECK(f.log(e) == static_cast<std::uint64_t>(i));
    for (std::int64_t j = 0; j < 15; ++j) {
      CHECK(f.mul(f.exp(i), f.exp(j)) == f.exp((i + j) % 15));
    }
  }
  CHECK_THROWS_AS(f.log(0), std::invalid_argument);
}

TEST_CASE("field arithmetic identities, p = 2 and p = 3") {
  for (const Field& f : {Field(2, 4), Field(3, 2)}) {
    const std::uint64_t q = f.order();
    for (Field::Repr a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, q - 1) == 1);
      }
      for (Field::Repr b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
      }
    }
    CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 5) == 0);
  }
}

TEST_CASE("element wrapper checks field compatibility") {
  const Field f16(2, 4);
  const Field f9(3, 2);
  const FieldElement a = field_generator(f16);
  const FieldElement b = field_generator(f9);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);

  const FieldElement c = a * a * a * a;  // gamma^4 = gamma + 1
  CHECK(c == a + field_one(f16));
  CHECK(c.log() == 4);
  CHECK((a / a) == field_one(f16));
  CHECK((-b + b) == field_zero(f9));
  CHECK(field_exp(f16, -1) * a == field_one(f16));
  CHECK(field_exp(f16, 14) == field_exp(f16, -1));
  CHECK(a.pow(15) == field_one(f16));

  CHECK(field_from_coeffs(f16, {1, 1, 0, 0}) == field_one(f16) + a);
  CHECK(field_from_coeffs(f16, {1, 1}) == field_one(f16) + a);  // short vectors pad
  CHECK_THROWS_AS(field_from_coeffs(f16, {2, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(field_from_coeffs(f16, {1, 0, 0, 0, 1}), std::invalid_argument);
  CHECK(field_element(f9, 5).coeffs() == std::vector<std::int64_t>{2, 1});
}

TEST_CASE("user modulus: accepted when primitive, rejected otherwise") {
  const Field f(2, 4, FpPoly(2, {1, 1, 0, 0, 1}));
  CHECK(f.same(Field(2, 4)));
  CHECK(Field(2, 4, std::vector<std::int64_t>{1, 1, 0, 0, 1}).same(f));
  CHECK_FALSE(Field(3, 2).same(f));

  // (x^2+x+1)^2: reducible
  CHECK_THROWS_WITH_AS(Field(2, 4, FpPoly(2, {1, 0, 1, 0, 1})),
                       doctest::Contains("reducible"), std::invalid_argument);
  // irreducible but x has order 5, not 15
  CHECK_THROWS_WITH_AS(Field(2, 4, FpPoly(2, {1, 1, 1, 1, 1})),
                       doctest::Contains("primitive"), std::invalid_argument);
  // x^2 + 1 over GF(3): irreducible, x has order 4, not 8
  CHECK_THROWS_WITH_AS(Field(3, 2, FpPoly(3, {1, 0, 1})),
                       doctest::Contains("primitive"), std::invalid_argument);
  // degree mismatch
  CHECK_THROWS_AS(Field(2, 4, FpPoly(2, {1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Field(9, 1), std::invalid_argument);   // 9 is not prime
  CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field(2, 63), std::invalid_argument);  // exceeds 2^62
}

TEST_CASE("large field works without tables") {
  const Field f(2, 31);
  CHECK_FALSE(f.has_tables());
  std::vector<std::int64_t> c(32, 0);
  c[0] = c[3] = c[31] = 1;
  CHECK(f.modulus() == FpPoly(2, c));  // x^31 + x^3 + 1

  const Field::Repr g = f.generator_repr();
  const Field::Repr h = f.mul(g, f.add(g, 1));
  CHECK(f.mul(h, f.inv(h)) == 1);
  CHECK(f.pow(g, f.order() - 1) == 1);
  CHECK(f.pow(g, 3) == f.mul(g, f.mul(g, g)));
  CHECK_THROWS_WITH_AS(f.log(g), doctest::Contains("table"), std::invalid_argument);
}

TEST_CASE("alternate modulus changes representation, not structure") {
  // x^4 + x^3 + 1 is the reciprocal primitive polynomial for GF(16)
  const Field g(2, 4, FpPoly(2, {1, 0, 0, 1, 1}));
  REQUIRE(g.has_tables());
  CHECK(g.exp(4) != g.add(g.generator_repr(), 1));  // gamma^4 = gamma^3 + 1 here
  for (std::int64_t i = 1; i < 15; ++i) {
    CHECK(g.exp(i) != 1);  // generator really has order 15
  }
  CHECK(g.exp(15) == 1);
}

}  // TEST_SUITE
