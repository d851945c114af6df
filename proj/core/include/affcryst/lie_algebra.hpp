#ifndef AFFCRYST_LIE_ALGEBRA_HPP
#define AFFCRYST_LIE_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "affcryst/matrix.hpp"

namespace affcryst {

/// Nilpotent Lie algebra on a fixed basis X_0..X_{n-1}, given by structure
/// constants for i < j; antisymmetry is structural. Basis indices are
/// 0-based throughout the C++ API.
class LieAlgebra {
 public:
  explicit LieAlgebra(int n);  ///< abelian

  int dim() const { return n_; }

  /// Sets [X_i, X_j] = coeffs (i < j required).
  void set_bracket(int i, int j, Vec coeffs);

  /// [X_i, X_j] for any i, j, with the sign handled.
  Vec bracket_basis(int i, int j) const;
  /// Bilinear extension.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of ad(X_i); column j holds [X_i, X_j].
  Matrix ad(int i) const;
  Matrix ad(const Vec& x) const;

  bool is_abelian() const;

  /// True when g is an invertible Lie algebra endomorphism:
  /// g[X_i,X_j] = [g X_i, g X_j] on all basis pairs.
  bool is_automorphism(const Matrix& g) const;

  /// True when each span(X_i..X_{n-1}) is a term of a central series,
  /// i.e. [X_j, X_k] lies in span(X_{max(j,k)+1}..X_{n-1}).
  bool has_malcev_order() const;

 private:
  int n_;
  std::vector<std::vector<Vec>> c_;  // c_[i][j] for i < j
};

struct LieValidation {
  int nil_class = 0;
  /// Bases of the descending central series, starting with the whole
  /// algebra and ending with the empty basis of the zero term.
  std::vector<std::vector<Vec>> series;
};

/// Checks the Jacobi identity on all basis triples and computes the
/// descending central series. Throws InvariantError (with the offending
/// triple) on a Jacobi failure, or when the series does not reach zero.
LieValidation validate(const LieAlgebra& lie);

int nil_class(const LieAlgebra& lie);

/// Positive grading given by a weight per basis vector. Valid when every
/// nonzero structure constant satisfies weight(k) = weight(i) + weight(j).
struct Grading {
  std::vector<int> weights;
};

bool is_valid_grading(const LieAlgebra& lie, const Grading& grading);

/// The diagonal derivation scaling the weight-w component by w;
/// nonsingular since the weights are positive. Throws on invalid gradings.
Matrix grading_derivation(const LieAlgebra& lie, const Grading& grading);

/// Representation of a Lie algebra by one operator per basis vector,
/// acting on the algebra's own underlying space.
class LinearRep {
 public:
  LinearRep(LieAlgebra lie, std::vector<Matrix> ops);

  const LieAlgebra& algebra() const { return lie_; }
  const Matrix& op(int i) const { return ops_[i]; }
  Matrix of_vec(const Vec& x) const;

  /// Homomorphism identity phi_{[X_i,X_j]} = [phi_i, phi_j]; throws with
  /// the first offending pair.
  void require_homomorphism() const;

  static LinearRep adjoint(const LieAlgebra& lie);
  static LinearRep scaled_adjoint(const LieAlgebra& lie, const Scalar& c);

 private:
  LieAlgebra lie_;
  std::vector<Matrix> ops_;
};

/// Basis of the smallest Lie subalgebra of gl_m containing the inputs,
/// in reduced echelon form (deterministic and idempotent).
std::vector<Matrix> lie_closure(const std::vector<Matrix>& ms);

/// Basis of { D : D[X,Y] = phi_X D Y - phi_Y D X }, one exact nullspace
/// call on the stacked constraint system. With phi = adjoint this is the
/// ordinary derivation algebra.
std::vector<Matrix> derivation_space(const LieAlgebra& lie, const LinearRep& phi);

/// g^{-1} phi_{gX} g = phi_X on all basis vectors; g must be an
/// automorphism of the base algebra.
bool is_compatible(const LinearRep& phi, const Matrix& g);

struct NonsingularSearch {
  int cap = 4;            ///< max space dimension for the exhaustive grid
  int samples = 200;      ///< random samples above the cap
  unsigned long seed = 0;
};

struct NonsingularResult {
  std::optional<Matrix> element;
  /// True when a "none" answer is certified: the deterministic grid
  /// {0..size}^k covers every vanishing pattern of the degree-<=size
  /// determinant polynomial. False above the cap (sampled search).
  bool exhaustive = false;
};

/// Searches span(space) for an element with nonzero determinant.
NonsingularResult find_nonsingular(const std::vector<Matrix>& space,
                                   const NonsingularSearch& opts = {});

}  // namespace affcryst

#endif
