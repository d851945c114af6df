#ifndef AFFCRYST_SHADOW_HPP
#define AFFCRYST_SHADOW_HPP

#include <vector>

#include "affcryst/affine_rep.hpp"
#include "affcryst/polynomial.hpp"

namespace affcryst {

/// Polycyclic group representation by affine generator images. The first
/// supplement_size generators span a nilpotent supplement C, the rest the
/// Fitting part F (those must be unipotent; checked). The group-theoretic
/// hypotheses on the abstract group (torsionfree polycyclic, C a nilpotent
/// supplement of Fitt, rank = dim) are the caller's responsibility; on
/// inputs violating them the verdict is unspecified.
class PolycyclicRep {
 public:
  PolycyclicRep(int n, std::vector<AffineMap> generators, int supplement_size);

  int dim() const { return n_; }
  int supplement_size() const { return supplement_; }
  const std::vector<AffineMap>& generators() const { return gens_; }

 private:
  int n_;
  std::vector<AffineMap> gens_;
  int supplement_;
};

/// Unipotent Jordan parts theta_i of the generators; Fitting generators
/// pass through unchanged.
std::vector<AffineMap> unipotent_shadow(const PolycyclicRep& rep);

PolycyclicRep conjugate(const PolycyclicRep& rep, const AffineMap& g);

struct PolyVerdict {
  bool crystallographic = false;
  bool engel_ok = false;
  int shadow_dim = 0;     ///< dimension of the Lie closure of the shadow logs
  Scalar delta;           ///< orbit determinant on a basis of the closure
};

/// Decision through the unipotent shadow: take logs of the shadow
/// generators, close under brackets, and test dimension + Engel +
/// nonvanishing orbit determinant at 0.
PolyVerdict is_crystallographic(const PolycyclicRep& rep);

struct HullActionData {
  std::vector<AffineLieElement> basis;  ///< basis of the shadow Lie closure
  std::vector<Matrix> action;           ///< conjugation matrix per generator
};

/// Conjugation action X -> g_i X g_i^{-1} of each generator on the shadow
/// Lie closure, in its computed basis. Requires a crystallographic input.
HullActionData hull_action(const PolycyclicRep& rep);

/// chi(g, T) == chi(a, T) * (T - 1) exactly, the characteristic-polynomial
/// restriction every generator of a crystallographic representation
/// satisfies against its hull action.
bool char_restriction_check(const AffineMap& g, const Matrix& a);

}  // namespace affcryst

#endif
