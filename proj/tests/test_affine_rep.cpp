#include <doctest.h>

#include "affcryst/errors.hpp"
#include "test_support.hpp"

using namespace affcryst;
using testsupport::Rng;

namespace {

AffineRep translations_rep(int n) {
  std::vector<AffineLieElement> images;
  for (int i = 0; i < n; ++i) {
    Vec w(n);
    w[i] = Scalar(1);
    images.push_back(AffineLieElement(Matrix(n, n), w));
  }
  return AffineRep(testsupport::abelian(n), images);
}

AffineRep one_dim_translation(const Scalar& v) {
  return AffineRep(testsupport::abelian(1),
                   {AffineLieElement(Matrix(1, 1), Vec{v})});
}

}  // namespace

TEST_CASE("representation validation") {
  SUBCASE("two-step heisenberg images are a representation") {
    CHECK(two_step_rep(testsupport::heisenberg3()).validate().ok);
  }

  SUBCASE("commuting nilpotent images over an abelian base") {
    CHECK(translations_rep(3).validate().ok);
  }

  SUBCASE("perturbing the center image breaks the pair (0,1)") {
    AffineRep good = two_step_rep(testsupport::heisenberg3());
    auto images = good.images();
    images[2] = AffineLieElement(Matrix(3, 3), Vec{Scalar(0), Scalar(0), Scalar(2)});
    AffineRep bad(good.algebra(), images);
    auto v = bad.validate();
    CHECK_FALSE(v.ok);
    CHECK(v.i == 0);
    CHECK(v.j == 1);
    CHECK_THROWS_AS(bad.require_valid(), InvariantError);
  }
}

TEST_CASE("orbit matrix") {
  SUBCASE("at the origin it reads the translation parts") {
    AffineRep rep = graded_rep(testsupport::heisenberg3(), Grading{{1, 1, 2}});
    CHECK(orbit_matrix(rep, Vec(3)) ==
          Matrix::diagonal(Vec{Scalar(1), Scalar(1), Scalar(2)}));
  }

  SUBCASE("one-dimensional translation at any base point") {
    AffineRep rep = one_dim_translation(Scalar(7, 3));
    CHECK(orbit_matrix(rep, Vec{Scalar(9)}).at(0, 0) == Scalar(7, 3));
  }

  SUBCASE("translations give the identity at every point") {
    Rng rng(107);
    AffineRep rep = translations_rep(3);
    for (int i = 0; i < 5; ++i)
      CHECK(orbit_matrix(rep, testsupport::rand_vec(rng, 3)) ==
            Matrix::identity(3));
  }
}

TEST_CASE("etale determinant and the crystallographic verdict") {
  CHECK(etale_det(one_dim_translation(Scalar(5))) == Scalar(5));
  CHECK(etale_det(two_step_rep(testsupport::heisenberg3())) == Scalar(1));
  CHECK(etale_det(graded_rep(testsupport::heisenberg3(), Grading{{1, 1, 2}})) ==
        Scalar(2));

  CrystVerdict yes = is_crystallographic(one_dim_translation(Scalar(1)));
  CHECK(yes.crystallographic);
  CHECK(yes.engel_ok);
  CHECK(yes.delta == Scalar(1));

  CrystVerdict no = is_crystallographic(one_dim_translation(Scalar(0)));
  CHECK_FALSE(no.crystallographic);
  CHECK(no.engel_ok);
  CHECK(no.delta == Scalar(0));

  SUBCASE("non-nilpotent images fail the engel gate") {
    Matrix semi(1, 1);
    semi.at(0, 0) = Scalar(1);
    AffineRep rep(testsupport::abelian(1),
                  {AffineLieElement(semi, Vec{Scalar(0)})});
    CHECK_FALSE(is_crystallographic(rep).engel_ok);
    CHECK_THROWS_AS(etale_det(rep), InvariantError);
  }
}

TEST_CASE("conjugation") {
  AffineRep rep = one_dim_translation(Scalar(1));
  CHECK(conjugate(rep, AffineMap::identity(1)).images() == rep.images());

  Matrix two(1, 1);
  two.at(0, 0) = Scalar(2);
  AffineMap scaling(two, Vec{Scalar(0)});
  AffineRep scaled = conjugate(rep, scaling);
  CHECK(scaled.images()[0].translation_part() == Vec{Scalar(2)});

  Rng rng(109);
  AffineRep h3rep = two_step_rep(testsupport::heisenberg3());
  AffineMap g = testsupport::rand_invertible_affine(rng, 3);
  AffineRep back = conjugate(conjugate(h3rep, g), g.inverse());
  CHECK(back.images() == h3rep.images());
}

TEST_CASE("precomposition by automorphisms") {
  AffineRep rep = translations_rep(2);
  CHECK(precompose(rep, Matrix::identity(2)).images() == rep.images());

  SUBCASE("basis swap on the translations") {
    Matrix swap(2, 2);
    swap.at(0, 1) = Scalar(1);
    swap.at(1, 0) = Scalar(1);
    AffineRep swapped = precompose(rep, swap);
    CHECK(swapped.images()[0] == rep.images()[1]);
    CHECK(swapped.images()[1] == rep.images()[0]);
  }

  SUBCASE("etale determinant vanishing is preserved") {
    Rng rng(113);
    AffineRep h3rep = two_step_rep(testsupport::heisenberg3());
    for (int i = 0; i < 5; ++i) {
      Matrix phi = testsupport::rand_h3_automorphism(rng);
      CHECK_FALSE(etale_det(precompose(h3rep, phi)).is_zero());
    }
  }

  SUBCASE("non-automorphisms are rejected") {
    LieAlgebra h3 = testsupport::heisenberg3();
    AffineRep h3rep = two_step_rep(h3);
    CHECK_THROWS_AS(
        precompose(h3rep, Matrix::diagonal(Vec{Scalar(1), Scalar(1), Scalar(3)})),
        InvariantError);
  }
}

TEST_CASE("conjugator search") {
  Rng rng(127);

  SUBCASE("random conjugates produce a verified witness") {
    for (int i = 0; i < 10; ++i) {
      AffineRep rep = i % 2 ? two_step_rep(testsupport::heisenberg3())
                            : translations_rep(3);
      AffineMap g = testsupport::rand_invertible_affine(rng, 3);
      AffineRep moved = conjugate(rep, g);
      ConjugatorResult r = find_conjugator(rep, moved);
      REQUIRE(r.conjugator.has_value());
      CHECK(conjugate(rep, *r.conjugator).images() == moved.images());
    }
  }

  SUBCASE("self-conjugacy returns a centralizing element") {
    AffineRep rep = translations_rep(2);
    ConjugatorResult r = find_conjugator(rep, rep);
    REQUIRE(r.conjugator.has_value());
    CHECK(conjugate(rep, *r.conjugator).images() == rep.images());
  }

  SUBCASE("distinct canonical products are never conjugate") {
    CAProduct zero(2);
    CAProduct pump(2);
    pump.set(0, 0, Vec{Scalar(0), Scalar(1)});  // e1 o e1 = e2
    ConjugatorResult r =
        find_conjugator(rep_from_product(zero), rep_from_product(pump));
    CHECK_FALSE(r.conjugator.has_value());
    CHECK(r.exhaustive);
  }
}

TEST_CASE("relative invariance of the etale determinant") {
  Rng rng(131);
  int done = 0;
  while (done < 200) {
    AffineRep rep = testsupport::rand_valid_unipotent_rep(rng, 4);
    AffineMap g = testsupport::rand_invertible_affine(rng, rep.dim());
    Scalar lhs = etale_det(conjugate(rep, g));
    CHECK(lhs == det(g.linear_part()) * etale_det(rep));
    ++done;
  }
}

TEST_CASE("base point independence of the orbit determinant") {
  Rng rng(137);
  for (int i = 0; i < 200; ++i) {
    AffineRep rep = testsupport::rand_valid_unipotent_rep(rng, 4);
    Scalar at_zero = det(orbit_matrix(rep, Vec(rep.dim())));
    for (int k = 0; k < 5; ++k) {
      Vec x = testsupport::rand_vec(rng, rep.dim());
      CHECK(det(orbit_matrix(rep, x)) == at_zero);
    }
  }
}

TEST_CASE("verdict invariance under the group actions") {
  Rng rng(139);
  AffineRep rep = two_step_rep(testsupport::heisenberg3());
  bool truth = is_crystallographic(rep).crystallographic;
  for (int i = 0; i < 10; ++i) {
    AffineMap g = testsupport::rand_invertible_affine(rng, 3);
    CHECK(is_crystallographic(conjugate(rep, g)).crystallographic == truth);
    Matrix phi = testsupport::rand_h3_automorphism(rng);
    CHECK(is_crystallographic(precompose(rep, phi)).crystallographic == truth);
  }
}
