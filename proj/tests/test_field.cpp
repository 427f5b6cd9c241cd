#include <catch2/catch_amalgamated.hpp>

#include "peirce/field.hpp"
#include "support.hpp"

using namespace peirce;

TEST_CASE("rational arithmetic is exact and canonical", "[field]") {
  FieldSpec q = FieldSpec::rationals();
  Scalar half = Scalar::parse(q, "1/2");
  Scalar third = Scalar::parse(q, "1/3");
  REQUIRE(scalar_arith(half, third, ScalarOp::add) == Scalar::parse(q, "5/6"));
  REQUIRE((half - half).is_zero());
  REQUIRE(Scalar::parse(q, "2/4") == half);
  REQUIRE(Scalar::parse(q, "-3/-6") == half);
  REQUIRE(Scalar::parse(q, "2/4").to_string() == "1/2");
  REQUIRE(Scalar::parse(q, "4/2").to_string() == "2");
}

TEST_CASE("prime field arithmetic", "[field]") {
  FieldSpec f5 = FieldSpec::prime(5);
  REQUIRE(scalar_arith(Scalar::of_int(f5, 3), Scalar::of_int(f5, 4), ScalarOp::mul) ==
          Scalar::of_int(f5, 2));
  REQUIRE(Scalar::of_int(f5, -1) == Scalar::of_int(f5, 4));
  REQUIRE(Scalar::of_int(f5, 2) / Scalar::of_int(f5, 3) == Scalar::of_int(f5, 4));
  REQUIRE_THROWS_AS(Scalar::of_int(f5, 1) / Scalar::of_int(f5, 0), Error);
  REQUIRE_THROWS_AS(FieldSpec::prime(6), Error);
  // p = 2 is a perfectly good field here
  FieldSpec f2 = FieldSpec::prime(2);
  REQUIRE((Scalar::of_int(f2, 1) + Scalar::of_int(f2, 1)).is_zero());
}

TEST_CASE("mixed-field operations are rejected", "[field]") {
  Scalar a = Scalar::of_int(FieldSpec::rationals(), 1);
  Scalar b = Scalar::of_int(FieldSpec::prime(3), 1);
  REQUIRE_THROWS_AS(a + b, Error);
  REQUIRE_THROWS_AS(scalar_arith(a, b, ScalarOp::mul), Error);
}

TEST_CASE("field axioms on randomized triples", "[field][property]") {
  std::mt19937_64 rng(20240811);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(5),
                      FieldSpec::prime(97)}) {
    for (int trial = 0; trial < 200; ++trial) {
      Scalar a = testing::random_scalar(f, rng);
      Scalar b = testing::random_scalar(f, rng);
      Scalar c = testing::random_scalar(f, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a - a).is_zero());
      if (!a.is_zero()) {
        REQUIRE(a * a.inverse() == Scalar::one(f));
        REQUIRE((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("canonical form: equal scalars have identical text", "[field][property]") {
  std::mt19937_64 rng(7);
  FieldSpec q = FieldSpec::rationals();
  for (int trial = 0; trial < 100; ++trial) {
    Scalar a = testing::random_scalar(q, rng);
    Scalar b = testing::random_nonzero_scalar(q, rng);
    Scalar x = (a / b) * b;  // same value, different computation route
    REQUIRE(x == a);
    REQUIRE(x.to_string() == a.to_string());
    REQUIRE(Scalar::parse(q, a.to_string()) == a);
  }
}
