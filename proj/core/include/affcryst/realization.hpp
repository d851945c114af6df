#ifndef AFFCRYST_REALIZATION_HPP
#define AFFCRYST_REALIZATION_HPP

#include <vector>

#include "affcryst/affine_rep.hpp"

namespace affcryst {

struct ExtensionAuto {
  Matrix phi;  ///< automorphism of the base algebra
  int order;   ///< exact finite order of phi
};

/// Finite extension data over a base representation: automorphisms with
/// declared orders, and relation words over the extension generators.
/// Words are sequences of nonzero 1-based letters: +/-j for the j-th lift,
/// +/-(m+i) for the i-th base generator (m = number of lifts); each word
/// must evaluate to the identity.
struct ExtensionSpec {
  AffineRep base;
  std::vector<ExtensionAuto> autos;
  std::vector<std::vector<int>> relations;
};

/// Conjugator between rep and its base change by phi; a witness certifies
/// that the conjugacy class of rep is fixed by phi. Requires a
/// crystallographic rep.
ConjugatorResult fixed_point_check(const AffineRep& rep, const Matrix& phi,
                                   const NonsingularSearch& opts = {});

/// Replaces ghat by u*ghat with u = exp(-(1/k) log(ghat^k)), a unipotent
/// correction commuting with ghat; the result has exact order dividing k
/// and induces the same conjugation on anything ghat^k centralizes.
/// Requires ghat^k unipotent.
AffineMap finite_order_correction(const AffineMap& ghat, int k);

struct RelationReport {
  std::vector<int> word;
  bool ok = false;
  Matrix residual;  ///< the word's value; identity when ok
};

struct ExtensionResult {
  std::vector<AffineMap> generators;  ///< lifts followed by base generators
  std::vector<RelationReport> relations;
  bool all_ok = false;
};

/// Verifies a split-extension presentation: each lift must realize its
/// automorphism by conjugation (lift exp(Y_i) lift^{-1} = exp(Y_{phi X_i})),
/// each phi must have its exact declared order, lift^order must be
/// unipotent, and every relation word is evaluated exactly. Relation
/// failures are reported, precondition failures throw.
ExtensionResult build_split_extension(const ExtensionSpec& spec,
                                      const std::vector<AffineMap>& lifts);

/// Best-effort lift construction from fixed-point conjugators: inverts the
/// conjugators, applies the finite-order correction, then solves one exact
/// linear system for translation adjustments (inside the translation part
/// of the image centralizer) making the relation words close. Relations
/// whose linear parts cannot close are left to the verification step.
std::vector<AffineMap> construct_lifts(const ExtensionSpec& spec,
                                       const std::vector<AffineMap>& conjugators);

}  // namespace affcryst

#endif
