#include <doctest.h>

#include "affcryst/errors.hpp"
#include "affcryst/jordan.hpp"
#include "test_support.hpp"

using namespace affcryst;
using testsupport::Rng;

TEST_CASE("shadow generators") {
  PolycyclicRep sol = testsupport::sol_rep();
  auto shadow = unipotent_shadow(sol);
  REQUIRE(shadow.size() == 3);

  SUBCASE("semisimple-by-translation generator collapses to its translation") {
    AffineMap expected =
        AffineMap::translation(Vec{Scalar(0), Scalar(0), Scalar(1)});
    CHECK(shadow[0] == expected);
  }

  SUBCASE("unipotent input passes through unchanged") {
    CHECK(shadow[1] == sol.generators()[1]);
    CHECK(shadow[2] == sol.generators()[2]);
  }

  SUBCASE("purely semisimple generator shadows to the identity") {
    Matrix lin = Matrix::diagonal(Vec{Scalar(1), Scalar(-1)});
    PolycyclicRep rep(2, {AffineMap(lin, Vec{Scalar(0), Scalar(0)})}, 1);
    CHECK(unipotent_shadow(rep)[0] == AffineMap::identity(2));
  }
}

TEST_CASE("polycyclic crystallographic decision") {
  SUBCASE("the solvable lattice is crystallographic with shadow dimension 3") {
    PolyVerdict v = is_crystallographic(testsupport::sol_rep());
    CHECK(v.crystallographic);
    CHECK(v.shadow_dim == 3);
    CHECK(v.engel_ok);
    CHECK((v.delta == Scalar(1) || v.delta == Scalar(-1)));
  }

  SUBCASE("dropping a translation leaves a dimension deficit") {
    PolycyclicRep sol = testsupport::sol_rep();
    PolycyclicRep crippled(
        3, {sol.generators()[0], sol.generators()[1]}, 1);
    PolyVerdict v = is_crystallographic(crippled);
    CHECK_FALSE(v.crystallographic);
    CHECK(v.shadow_dim == 2);
  }

  SUBCASE("purely unipotent input agrees with the nilpotent decision") {
    AffineRep h3rep = two_step_rep(testsupport::heisenberg3());
    PolycyclicRep as_pcrep(3, h3rep.generators(), 3);
    PolyVerdict poly = is_crystallographic(as_pcrep);
    CrystVerdict nil = is_crystallographic(h3rep);
    CHECK(poly.crystallographic == nil.crystallographic);
    CHECK(poly.shadow_dim == 3);
  }

  SUBCASE("non-unipotent Fitting generators are rejected") {
    Matrix lin = Matrix::diagonal(Vec{Scalar(2), Scalar(1)});
    AffineMap semi(lin, Vec{Scalar(0), Scalar(0)});
    CHECK_THROWS_AS(PolycyclicRep(2, {semi}, 0), InvariantError);
  }
}

TEST_CASE("hull action") {
  SUBCASE("solvable lattice: the semisimple generator scales the shadow") {
    HullActionData data = hull_action(testsupport::sol_rep());
    REQUIRE(data.action.size() == 3);
    Scalar lambda(mpq_class(3, 2), mpq_class(1, 2), 5);
    CHECK(data.action[0] ==
          Matrix::diagonal(Vec{lambda, lambda.conj(), Scalar(1)}));

    SUBCASE("translation generators act trivially") {
      CHECK(data.action[1] == Matrix::identity(3));
      CHECK(data.action[2] == Matrix::identity(3));
    }
  }

  SUBCASE("nilpotent reference gives unipotent action matrices") {
    AffineRep h3rep = two_step_rep(testsupport::heisenberg3());
    PolycyclicRep as_pcrep(3, h3rep.generators(), 3);
    for (const auto& a : hull_action(as_pcrep).action)
      CHECK(classify(a) == MatrixClass::Unipotent);
  }
}

TEST_CASE("characteristic polynomial restriction") {
  SUBCASE("solvable lattice: both sides expanded independently") {
    PolycyclicRep sol = testsupport::sol_rep();
    HullActionData data = hull_action(sol);
    for (std::size_t i = 0; i < sol.generators().size(); ++i)
      CHECK(char_restriction_check(sol.generators()[i], data.action[i]));

    // oracle for the semisimple generator: chi(c) = (T^2-3T+1)(T-1)^2 and
    // chi_U(c)(T-1) = (T^2-3T+1)(T-1)*(T-1), multiplied out separately
    Polynomial quad(Vec{Scalar(1), Scalar(-3), Scalar(1)});
    Polynomial lin(Vec{Scalar(-1), Scalar(1)});
    CHECK(char_poly(sol.generators()[0].matrix()) == quad * lin * lin);
    CHECK(char_poly(data.action[0]) * lin == quad * lin * lin);
  }

  SUBCASE("plane translation") {
    AffineMap t = AffineMap::translation(Vec{Scalar(1), Scalar(0)});
    CHECK(char_restriction_check(t, Matrix::identity(2)));
  }

  SUBCASE("eigenvalue mismatch fails") {
    Matrix two(1, 1);
    two.at(0, 0) = Scalar(2);
    AffineMap g(two, Vec{Scalar(0)});
    CHECK_FALSE(char_restriction_check(g, Matrix::identity(1)));
  }
}

TEST_CASE("shadow equivariance under conjugation") {
  Rng rng(163);
  for (int i = 0; i < 50; ++i) {
    // random polycyclic input: a mixed generator plus unipotent ones
    int n = 2 + static_cast<int>(rng() % 2);
    long disc = i % 3 == 0 ? 5 : 0;
    std::vector<AffineMap> gens;
    Vec eigs(n);
    for (int k = 0; k < n; ++k)
      eigs[k] = Scalar(1 + static_cast<long>(rng() % 3));
    gens.push_back(AffineMap(Matrix::diagonal(eigs),
                             testsupport::rand_vec(rng, n, disc, 2)));
    gens.push_back(testsupport::rand_unipotent_affine(rng, n, disc));
    PolycyclicRep rep(n, gens, 1);

    AffineMap g = testsupport::rand_invertible_affine(rng, n, disc);
    auto shadow_then_conj = unipotent_shadow(rep);
    for (auto& theta : shadow_then_conj) theta = g * theta * g.inverse();
    auto conj_then_shadow = unipotent_shadow(conjugate(rep, g));
    REQUIRE(shadow_then_conj.size() == conj_then_shadow.size());
    for (std::size_t k = 0; k < shadow_then_conj.size(); ++k)
      CHECK(shadow_then_conj[k] == conj_then_shadow[k]);
  }
}

TEST_CASE("restriction holds for every crystallographic generator") {
  std::vector<PolycyclicRep> corpus;
  corpus.push_back(testsupport::sol_rep());
  AffineRep h3rep = two_step_rep(testsupport::heisenberg3());
  corpus.push_back(PolycyclicRep(3, h3rep.generators(), 3));
  for (const auto& rep : corpus) {
    REQUIRE(is_crystallographic(rep).crystallographic);
    HullActionData data = hull_action(rep);
    for (std::size_t i = 0; i < rep.generators().size(); ++i)
      CHECK(char_restriction_check(rep.generators()[i], data.action[i]));
  }
}
