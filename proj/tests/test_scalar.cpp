#include <doctest.h>

#include "affcryst/errors.hpp"
#include "test_support.hpp"

using namespace affcryst;

TEST_CASE("rational normalization and arithmetic") {
  Scalar a(2, 4);
  CHECK(a == Scalar(1, 2));
  CHECK(a.str() == "1/2");
  CHECK(Scalar(3, -6) == Scalar(-1, 2));  // positive denominator
  CHECK((Scalar(1, 3) + Scalar(1, 6)) == Scalar(1, 2));
  CHECK((Scalar(2, 3) * Scalar(3, 4)) == Scalar(1, 2));
  CHECK((Scalar(5) / Scalar(10)) == Scalar(1, 2));
  CHECK(Scalar(7).str() == "7");
  CHECK_THROWS_AS(Scalar(1, 0), InvariantError);
  CHECK_THROWS_AS(Scalar(0).inverse(), InvariantError);
}

TEST_CASE("quadratic field arithmetic") {
  Scalar s5 = Scalar::sqrt_d(5);
  Scalar lambda = (Scalar(3) + s5) / Scalar(2);  // (3+sqrt5)/2
  CHECK(lambda.rat() == mpq_class(3, 2));
  CHECK(lambda.surd() == mpq_class(1, 2));
  CHECK((s5 * s5) == Scalar(5));
  CHECK((lambda * lambda.conj()) == Scalar(1));
  CHECK(lambda.inverse() == lambda.conj());  // norm 1
  CHECK((lambda - lambda) == Scalar(0));
  CHECK((lambda - lambda).is_rational());  // context collapses at b = 0

  SUBCASE("distinct discriminants never mix") {
    CHECK_THROWS_AS(Scalar::sqrt_d(5) + Scalar::sqrt_d(3), InvariantError);
  }

  SUBCASE("conjugate norm identity on random values") {
    testsupport::Rng rng(17);
    for (int i = 0; i < 120; ++i) {
      Scalar x = testsupport::rand_scalar(rng, 5);
      Scalar expected = Scalar(x.rat() * x.rat() - 5 * x.surd() * x.surd());
      CHECK(x * x.conj() == expected);
      CHECK(x.norm() == expected);
    }
  }
}

TEST_CASE("rational text parsing") {
  CHECK(parse_rational("3/4") == mpq_class(3, 4));
  CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
  CHECK(parse_rational("12") == 12);
  CHECK(parse_rational("+2") == 2);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}
