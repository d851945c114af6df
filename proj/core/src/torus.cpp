#include "affcryst/torus.hpp"

#include "affcryst/errors.hpp"
#include "affcryst/jordan.hpp"

namespace affcryst {

CAProduct::CAProduct(int n) : n_(n) {
  if (n < 0) throw InvariantError("negative dimension");
  d_.resize(n);
  for (int i = 0; i < n; ++i) d_[i].assign(n, Vec(n));
}

void CAProduct::set(int i, int j, Vec coeffs) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw InvariantError("basis index out of range");
  if (static_cast<int>(coeffs.size()) != n_)
    throw InvariantError("product coefficient count mismatch");
  d_[i][j] = coeffs;
  d_[j][i] = std::move(coeffs);
}

Vec CAProduct::mul(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw InvariantError("product operand size mismatch");
  Vec r(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (int k = 0; k < n_; ++k) r[k] += f * d_[i][j][k];
    }
  }
  return r;
}

Matrix CAProduct::left_mult(int i) const {
  std::vector<Vec> cols(n_);
  for (int j = 0; j < n_; ++j) cols[j] = d_[i][j];
  return Matrix::from_cols(cols);
}

void CAProduct::require_valid() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        Vec lhs = mul(d_[i][j], Matrix::identity(n_).col(k));
        Vec rhs = mul(Matrix::identity(n_).col(i), d_[j][k]);
        if (lhs != rhs)
          throw InvariantError("product is not associative on triple (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(k) + ")");
      }
  std::vector<Matrix> lefts;
  for (int i = 0; i < n_; ++i) lefts.push_back(left_mult(i));
  if (!engel_flag(lefts).ok)
    throw InvariantError("left multiplications are not simultaneously nilpotent");
}

namespace {

void require_abelian(const AffineRep& rep) {
  if (!rep.algebra().is_abelian())
    throw InvariantError("operation requires an abelian base algebra");
}

}  // namespace

Matrix translation_matrix(const AffineRep& rep) {
  require_abelian(rep);
  rep.require_valid();
  std::vector<Vec> cols;
  for (const auto& y : rep.images()) cols.push_back(y.translation_part());
  return Matrix::from_cols(cols);
}

AffineRep normalize_translations(const AffineRep& rep) {
  Matrix tbar = translation_matrix(rep);
  if (det(tbar).is_zero())
    throw InvariantError("translation matrix is singular; representation is not etale at 0");
  Matrix tinv = inverse(tbar);
  std::vector<AffineLieElement> images;
  for (int i = 0; i < rep.dim(); ++i)
    images.push_back(rep.image_of(tinv.col(i)));
  return AffineRep(rep.algebra(), std::move(images));
}

AffineRep rep_from_product(const CAProduct& c) {
  c.require_valid();
  const int n = c.dim();
  LieAlgebra abelian(n);
  std::vector<AffineLieElement> images;
  for (int i = 0; i < n; ++i)
    images.push_back(AffineLieElement(c.left_mult(i), Matrix::identity(n).col(i)));
  return AffineRep(abelian, std::move(images));
}

CAProduct product_from_rep(const AffineRep& rep) {
  require_abelian(rep);
  rep.require_valid();
  const int n = rep.dim();
  if (translation_matrix(rep) != Matrix::identity(n))
    throw InvariantError("representation is not translation-normalized");
  CAProduct c(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vec v = rep.images()[i].linear_part().col(j);
      if (v != rep.images()[j].linear_part().col(i))
        throw InvariantError("extracted product is not commutative");
      c.set(i, j, v);
    }
  c.require_valid();
  return c;
}

CAProduct canonical_product(const AffineRep& rep) {
  return product_from_rep(normalize_translations(rep));
}

bool are_conjugate(const AffineRep& a, const AffineRep& b) {
  if (a.dim() != b.dim()) throw InvariantError("dimension mismatch");
  if (!is_crystallographic(a).crystallographic ||
      !is_crystallographic(b).crystallographic)
    throw InvariantError("conjugacy test requires crystallographic inputs");
  return canonical_product(a) == canonical_product(b);
}

CAProduct transport(const CAProduct& c, const Matrix& g) {
  const int n = c.dim();
  if (!g.is_square() || g.rows() != n) throw InvariantError("shape mismatch");
  Matrix ginv = inverse(g);
  CAProduct r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      r.set(i, j, g.apply(c.mul(ginv.col(i), ginv.col(j))));
  return r;
}

}  // namespace affcryst
