#include <doctest.h>

#include "affcryst/errors.hpp"
#include "test_support.hpp"

using namespace affcryst;
using testsupport::Rng;

namespace {

Polynomial from_longs(std::initializer_list<long> coeffs) {
  Vec v;
  for (long c : coeffs) v.push_back(Scalar(c));
  return Polynomial(v);
}

}  // namespace

TEST_CASE("characteristic polynomials") {
  Matrix a(2, 2);
  a.at(0, 0) = Scalar(2);
  a.at(0, 1) = Scalar(1);
  a.at(1, 1) = Scalar(2);
  CHECK(char_poly(a) == from_longs({4, -4, 1}));  // T^2 - 4T + 4

  Matrix nil(2, 2);
  nil.at(0, 1) = Scalar(1);
  CHECK(char_poly(nil) == from_longs({0, 0, 1}));  // T^2

  SUBCASE("block generator over Q(sqrt 5): product of the factors") {
    Scalar lambda(mpq_class(3, 2), mpq_class(1, 2), 5);
    Matrix c(4, 4);
    c.at(0, 0) = lambda;
    c.at(1, 1) = lambda.conj();
    c.at(2, 2) = Scalar(1);
    c.at(2, 3) = Scalar(1);
    c.at(3, 3) = Scalar(1);
    // oracle: multiply (T^2-3T+1) and (T-1)^2 independently
    Polynomial expected =
        from_longs({1, -3, 1}) * from_longs({-1, 1}) * from_longs({-1, 1});
    CHECK(char_poly(c) == expected);
  }

  SUBCASE("conjugation invariance") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
      long disc = i % 5 == 0 ? 5 : 0;
      Matrix m = testsupport::rand_matrix(rng, 3, 3, disc, 3);
      Matrix h = testsupport::rand_invertible(rng, 3, disc, 3);
      CHECK(char_poly(h * m * inverse(h)) == char_poly(m));
    }
  }
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(from_longs({4, -4, 1})) == from_longs({-2, 1}));
  CHECK(squarefree_part(from_longs({0, 0, 1})) == from_longs({0, 1}));

  // (T^2-3T+1)(T-1)^2 -> (T^2-3T+1)(T-1), oracle by direct multiplication
  Polynomial p = from_longs({1, -3, 1}) * from_longs({-1, 1}) * from_longs({-1, 1});
  Polynomial expected = from_longs({1, -3, 1}) * from_longs({-1, 1});
  CHECK(squarefree_part(p) == expected.monic());

  CHECK_THROWS_AS(squarefree_part(Polynomial()), InvariantError);
}

TEST_CASE("squarefree output is squarefree") {
  Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    // random product of small factors with repetition
    Polynomial p = Polynomial::constant(Scalar(1));
    int factors = 1 + static_cast<int>(rng() % 3);
    for (int f = 0; f < factors; ++f) {
      Polynomial base(Vec{testsupport::rand_rational(rng, 3), Scalar(1)});
      int mult = 1 + static_cast<int>(rng() % 3);
      for (int m = 0; m < mult; ++m) p = p * base;
    }
    Polynomial sf = squarefree_part(p);
    CHECK(gcd(sf, sf.derivative()).degree() == 0);
    CHECK(divmod(p, sf).second.is_zero());
  }
}

TEST_CASE("division, gcd and evaluation") {
  Polynomial p = from_longs({-1, 0, 1});   // T^2 - 1
  Polynomial q = from_longs({1, 1});       // T + 1
  auto [quot, rem] = divmod(p, q);
  CHECK(rem.is_zero());
  CHECK(quot == from_longs({-1, 1}));
  CHECK(gcd(p, q) == q.monic());

  CHECK(p.eval(Scalar(3)) == Scalar(8));
  Matrix nil(2, 2);
  nil.at(0, 1) = Scalar(1);
  CHECK(p.eval(nil) == -Matrix::identity(2));
  CHECK(from_longs({4, -4, 1}).str() == "T^2-4*T+4");
}
