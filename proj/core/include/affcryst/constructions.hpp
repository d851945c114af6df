#ifndef AFFCRYST_CONSTRUCTIONS_HPP
#define AFFCRYST_CONSTRUCTIONS_HPP

#include <vector>

#include "affcryst/affine_rep.hpp"

namespace affcryst {

/// Images (1/2 ad_{X_i}, X_i) for a class <= 2 algebra; crystallographic
/// with etale determinant 1 and invariant under every automorphism.
AffineRep two_step_rep(const LieAlgebra& lie);

/// Images (ad_{X_i}, D X_i) for a nonsingular ordinary derivation D.
AffineRep derivation_rep(const LieAlgebra& lie, const Matrix& d);

/// derivation_rep with the diagonal derivation of a positive grading;
/// invariant under grading-preserving automorphisms.
AffineRep graded_rep(const LieAlgebra& lie, const Grading& grading);

struct ThreeStepParams {
  Scalar alpha, beta, gamma;  ///< block scales on V1, V2, V3
  Matrix block_scale;         ///< g, diagonal on the chosen decomposition
  Matrix derivation;          ///< nonsingular D for phi = g ad g^{-1}
};

struct ThreeStepResult {
  AffineRep rep;
  ThreeStepParams params;
};

/// Parameter search for class <= 3 algebras: choose a vector space
/// decomposition V1 + V2 + V3 compatible with the descending central
/// series, scan block scales (alpha, beta, gamma) over a small positive
/// rational grid, and for each solve the full derivation space of
/// phi_X = g ad_X g^{-1} for a nonsingular element. First success wins.
/// Throws InvariantError when the class exceeds 3 or the grid is exhausted
/// (the message lists the parameters tried).
ThreeStepResult three_step_rep(const LieAlgebra& lie,
                               const std::vector<Scalar>& grid = {});

}  // namespace affcryst

#endif
