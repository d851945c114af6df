#ifndef AFFCRYST_TORUS_HPP
#define AFFCRYST_TORUS_HPP

#include <vector>

#include "affcryst/affine_rep.hpp"

namespace affcryst {

/// Commutative associative product with nilpotent left multiplications,
/// e_i o e_j = sum_k d_{ij}^k e_k. These products are exactly the
/// canonical forms of crystallographic lattice representations with
/// abelian base.
class CAProduct {
 public:
  explicit CAProduct(int n);  ///< zero product

  int dim() const { return n_; }

  /// Sets e_i o e_j (and e_j o e_i).
  void set(int i, int j, Vec coeffs);
  const Vec& table(int i, int j) const { return d_[i][j]; }

  Vec mul(const Vec& x, const Vec& y) const;
  Matrix left_mult(int i) const;  ///< L_{e_i}; column j holds e_i o e_j

  /// Associativity on all basis triples and nilpotency of the left
  /// multiplications (simultaneous triangularization); throws on failure.
  void require_valid() const;

  friend bool operator==(const CAProduct& a, const CAProduct& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }
  friend bool operator!=(const CAProduct& a, const CAProduct& b) {
    return !(a == b);
  }

 private:
  int n_;
  std::vector<std::vector<Vec>> d_;
};

/// Matrix with columns w_i, the translation parts of the images.
/// Requires an abelian base algebra.
Matrix translation_matrix(const AffineRep& rep);

/// The unique conjugacy-class representative with translation matrix I:
/// base change of the images by translation_matrix(rep)^{-1}.
AffineRep normalize_translations(const AffineRep& rep);

/// Images (L_{e_i}, e_i); crystallographic with etale determinant 1.
AffineRep rep_from_product(const CAProduct& c);

/// Inverse of rep_from_product on normalized representations:
/// d_{ij}^k = (M_i)_{kj}. Validates the extracted product.
CAProduct product_from_rep(const AffineRep& rep);

/// Canonical form of a crystallographic abelian representation.
CAProduct canonical_product(const AffineRep& rep);

/// Conjugacy by exact equality of canonical forms.
bool are_conjugate(const AffineRep& a, const AffineRep& b);

/// Transport of structure x o' y = g(g^{-1}x o g^{-1}y).
CAProduct transport(const CAProduct& c, const Matrix& g);

}  // namespace affcryst

#endif
