#ifndef AFFCRYST_AFFINE_REP_HPP
#define AFFCRYST_AFFINE_REP_HPP

#include <optional>
#include <vector>

#include "affcryst/affine.hpp"
#include "affcryst/lie_algebra.hpp"

namespace affcryst {

/// Lie algebra homomorphism into the affine Lie algebra gl(V) + V, given
/// by one image Y_i per basis vector. The base algebra dimension equals
/// the ambient dimension (rank condition), enforced structurally.
class AffineRep {
 public:
  AffineRep(LieAlgebra lie, std::vector<AffineLieElement> images);

  int dim() const { return lie_.dim(); }
  const LieAlgebra& algebra() const { return lie_; }
  const std::vector<AffineLieElement>& images() const { return images_; }

  AffineLieElement image_of(const Vec& x) const;  ///< sum x_i Y_i

  struct Validation {
    bool ok = true;
    int i = -1, j = -1;  ///< first offending pair when !ok
  };
  /// Bracket compatibility Y_{[X_i,X_j]} = [Y_i, Y_j] on all basis pairs.
  Validation validate() const;
  void require_valid() const;  ///< throws InvariantError with the pair

  /// exp of the images; requires nilpotent image matrices.
  std::vector<AffineMap> generators() const;

 private:
  LieAlgebra lie_;
  std::vector<AffineLieElement> images_;
};

/// The n x n matrix whose i-th column is M_i x + w_i, the orbit-map
/// differential evaluated on the images at base point x.
Matrix orbit_matrix(const AffineRep& rep, const Vec& x);

/// det orbit_matrix(rep, 0); nonzero exactly when the closure of the image
/// group acts simply transitively. Requires unipotent images (Engel check).
Scalar etale_det(const AffineRep& rep);

struct CrystVerdict {
  bool crystallographic = false;
  bool engel_ok = false;
  Scalar delta;  ///< 0 when the Engel check fails
};

/// Full decision: unipotent images (simultaneous strict triangularization)
/// and nonvanishing etale determinant.
CrystVerdict is_crystallographic(const AffineRep& rep);

/// Images g Y_i g^{-1}.
AffineRep conjugate(const AffineRep& rep, const AffineMap& g);

/// Base change by an automorphism phi of the algebra: the new rep is
/// X -> Y_{phi^{-1} X}.
AffineRep precompose(const AffineRep& rep, const Matrix& phi);

struct ConjugatorResult {
  std::optional<AffineMap> conjugator;
  /// When no conjugator is returned: true means the answer is certified
  /// (exhaustive grid), false means the sampled search may have missed one.
  bool exhaustive = false;
};

/// Searches for g with conjugate(a, g) == b: solves the linear intertwiner
/// system on the generators exp(Y_i) over affine-shaped unknowns and looks
/// for a nonsingular solution. A returned witness is rechecked exactly.
ConjugatorResult find_conjugator(const AffineRep& a, const AffineRep& b,
                                 const NonsingularSearch& opts = {});

}  // namespace affcryst

#endif
