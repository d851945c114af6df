#include "affcryst/affine.hpp"

#include "affcryst/errors.hpp"

namespace affcryst {

namespace {

Matrix embed(const Matrix& linear, const Vec& translation, const Scalar& corner) {
  const int n = linear.rows();
  if (!linear.is_square() || static_cast<int>(translation.size()) != n)
    throw InvariantError("affine block shape mismatch");
  Matrix m(n + 1, n + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m.at(r, c) = linear.at(r, c);
    m.at(r, n) = translation[r];
  }
  m.at(n, n) = corner;
  return m;
}

}  // namespace

AffineMap::AffineMap(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square() || m_.rows() < 1)
    throw InvariantError("affine map must be square");
  const int n = m_.rows() - 1;
  for (int c = 0; c < n; ++c)
    if (!m_.at(n, c).is_zero())
      throw InvariantError("affine map last row must be (0,...,0,1)");
  if (!m_.at(n, n).is_one())
    throw InvariantError("affine map last row must be (0,...,0,1)");
}

AffineMap::AffineMap(const Matrix& linear, const Vec& translation)
    : m_(embed(linear, translation, Scalar(1))) {}

AffineMap AffineMap::identity(int n) { return AffineMap(Matrix::identity(n + 1)); }

AffineMap AffineMap::translation(const Vec& v) {
  return AffineMap(Matrix::identity(static_cast<int>(v.size())), v);
}

Matrix AffineMap::linear_part() const {
  const int n = dim();
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a.at(r, c) = m_.at(r, c);
  return a;
}

Vec AffineMap::translation_part() const {
  const int n = dim();
  Vec v(n);
  for (int r = 0; r < n; ++r) v[r] = m_.at(r, n);
  return v;
}

Vec AffineMap::apply(const Vec& x) const {
  return linear_part().apply(x) + translation_part();
}

AffineMap AffineMap::inverse() const { return AffineMap(affcryst::inverse(m_)); }

AffineMap AffineMap::pow(int k) const {
  if (k < 0) throw InvariantError("negative affine power");
  return AffineMap(m_.pow(k));
}

bool AffineMap::is_unipotent() const {
  return is_nilpotent(m_ - Matrix::identity(m_.rows()));
}

AffineLieElement::AffineLieElement(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square() || m_.rows() < 1)
    throw InvariantError("affine Lie element must be square");
  const int n = m_.rows() - 1;
  for (int c = 0; c <= n; ++c)
    if (!m_.at(n, c).is_zero())
      throw InvariantError("affine Lie element last row must vanish");
}

AffineLieElement::AffineLieElement(const Matrix& linear, const Vec& translation)
    : m_(embed(linear, translation, Scalar(0))) {}

AffineLieElement AffineLieElement::zero(int n) {
  return AffineLieElement(Matrix(n + 1, n + 1));
}

Matrix AffineLieElement::linear_part() const {
  const int n = dim();
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a.at(r, c) = m_.at(r, c);
  return a;
}

Vec AffineLieElement::translation_part() const {
  const int n = dim();
  Vec v(n);
  for (int r = 0; r < n; ++r) v[r] = m_.at(r, n);
  return v;
}

Vec AffineLieElement::orbit_at(const Vec& x) const {
  return linear_part().apply(x) + translation_part();
}

AffineLieElement bracket(const AffineLieElement& x, const AffineLieElement& y) {
  return AffineLieElement(x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

Matrix exp_nilpotent(const Matrix& x) {
  if (!is_nilpotent(x)) throw InvariantError("exp of a non-nilpotent matrix");
  const int n = x.rows();
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    term = Scalar(1, k) * (term * x);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

Matrix log_unipotent(const Matrix& g) {
  const int n = g.rows();
  Matrix nil = g - Matrix::identity(n);
  if (!is_nilpotent(nil)) throw InvariantError("log of a non-unipotent matrix");
  Matrix result(n, n);
  Matrix power = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    power = power * nil;
    if (power.is_zero()) break;
    result += Scalar(k % 2 == 1 ? 1 : -1, k) * power;
  }
  return result;
}

AffineMap exp_nilpotent(const AffineLieElement& x) {
  return AffineMap(exp_nilpotent(x.matrix()));
}

AffineLieElement log_unipotent(const AffineMap& g) {
  return AffineLieElement(log_unipotent(g.matrix()));
}

}  // namespace affcryst
