#ifndef AFFCRYST_AFFINE_HPP
#define AFFCRYST_AFFINE_HPP

#include "affcryst/matrix.hpp"

namespace affcryst {

/// Affine transformation of an n-dimensional space, stored as the
/// (n+1)x(n+1) block matrix [[A, v], [0, 1]].
class AffineMap {
 public:
  AffineMap() = default;
  explicit AffineMap(Matrix m);  ///< checks the last row is (0,...,0,1)
  AffineMap(const Matrix& linear, const Vec& translation);

  static AffineMap identity(int n);
  static AffineMap translation(const Vec& v);

  int dim() const { return m_.rows() - 1; }
  const Matrix& matrix() const { return m_; }
  Matrix linear_part() const;
  Vec translation_part() const;

  Vec apply(const Vec& x) const;  ///< x -> A x + v

  AffineMap inverse() const;
  AffineMap pow(int k) const;  ///< k >= 0

  friend AffineMap operator*(const AffineMap& x, const AffineMap& y) {
    return AffineMap(x.m_ * y.m_);
  }
  friend bool operator==(const AffineMap& x, const AffineMap& y) {
    return x.m_ == y.m_;
  }
  friend bool operator!=(const AffineMap& x, const AffineMap& y) {
    return !(x == y);
  }

  bool is_unipotent() const;

 private:
  Matrix m_;
};

/// Element of the affine Lie algebra gl(V) + V: an (n+1)x(n+1) matrix
/// with zero last row, blocks [[M, w], [0, 0]].
class AffineLieElement {
 public:
  AffineLieElement() = default;
  explicit AffineLieElement(Matrix m);  ///< checks the last row is zero
  AffineLieElement(const Matrix& linear, const Vec& translation);

  static AffineLieElement zero(int n);

  int dim() const { return m_.rows() - 1; }
  const Matrix& matrix() const { return m_; }
  Matrix linear_part() const;
  Vec translation_part() const;

  /// Orbit-map differential at x: (M, w) -> M x + w.
  Vec orbit_at(const Vec& x) const;

  AffineLieElement operator-() const { return AffineLieElement(-m_); }
  friend AffineLieElement operator+(const AffineLieElement& x,
                                    const AffineLieElement& y) {
    return AffineLieElement(x.m_ + y.m_);
  }
  friend AffineLieElement operator-(const AffineLieElement& x,
                                    const AffineLieElement& y) {
    return AffineLieElement(x.m_ - y.m_);
  }
  friend AffineLieElement operator*(const Scalar& c, const AffineLieElement& x) {
    return AffineLieElement(c * x.m_);
  }
  friend bool operator==(const AffineLieElement& x, const AffineLieElement& y) {
    return x.m_ == y.m_;
  }
  friend bool operator!=(const AffineLieElement& x, const AffineLieElement& y) {
    return !(x == y);
  }

 private:
  Matrix m_;
};

AffineLieElement bracket(const AffineLieElement& x, const AffineLieElement& y);

/// Finite exponential series of a nilpotent matrix; throws when the
/// input is not nilpotent.
Matrix exp_nilpotent(const Matrix& x);
AffineMap exp_nilpotent(const AffineLieElement& x);

/// Finite logarithm series of a unipotent matrix; the exact inverse of
/// exp_nilpotent. Throws when g - I is not nilpotent.
Matrix log_unipotent(const Matrix& g);
AffineLieElement log_unipotent(const AffineMap& g);

}  // namespace affcryst

#endif
