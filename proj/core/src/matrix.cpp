#include "affcryst/matrix.hpp"

#include "affcryst/errors.hpp"

namespace affcryst {

Vec operator+(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw InvariantError("vector size mismatch");
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vec operator-(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw InvariantError("vector size mismatch");
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vec operator*(const Scalar& c, const Vec& x) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

bool is_zero(const Vec& x) {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_)
      throw InvariantError("ragged rows");
    for (int c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix();
  Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols_; ++c) {
    if (static_cast<int>(cols[c].size()) != m.rows_)
      throw InvariantError("ragged columns");
    for (int r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

Vec Matrix::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw InvariantError("trace of a non-square matrix");
  Scalar t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::pow(int k) const {
  if (!is_square()) throw InvariantError("power of a non-square matrix");
  Matrix r = identity(rows_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Matrix Matrix::unflatten(const Vec& v, int rows, int cols) {
  if (static_cast<int>(v.size()) != rows * cols)
    throw InvariantError("unflatten size mismatch");
  Matrix m(rows, cols);
  m.e_ = v;
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw InvariantError("matrix-vector size mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Scalar s;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InvariantError("matrix shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InvariantError("matrix shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw InvariantError("matrix product shape mismatch");
  Matrix r(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      const Scalar& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

Matrix operator*(const Scalar& c, Matrix m) {
  for (auto& v : m.e_) v = c * v;
  return m;
}

Matrix Matrix::operator-() const { return Scalar(-1) * *this; }

Scalar det(const Matrix& m) {
  if (!m.is_square()) throw InvariantError("determinant of a non-square matrix");
  int n = m.rows();
  Matrix a = m;
  Scalar result(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
      result = -result;
    }
    const Scalar p = a.at(col, col);
    result *= p;
    Scalar pinv = p.inverse();
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Scalar f = a.at(r, col) * pinv;
      for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
    }
  }
  return result;
}

Echelon rref(Matrix m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    Scalar pinv = m.at(r, c).inverse();
    for (int j = c; j < cols; ++j) m.at(r, j) = pinv * m.at(r, j);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m, pivots};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> nullspace(const Matrix& m) {
  const int cols = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = Scalar(1);
    for (std::size_t row = 0; row < e.pivots.size(); ++row)
      v[e.pivots[row]] = -e.reduced.at(static_cast<int>(row), free);
    // leading entry normalized to 1
    for (auto& x : v)
      if (!x.is_zero()) {
        Scalar lead_inv = x.inverse();
        for (auto& y : v) y = lead_inv * y;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw InvariantError("solve: rhs size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  Echelon e = rref(aug);
  for (int p : e.pivots)
    if (p == a.cols()) return std::nullopt;  // row (0..0 | 1): inconsistent
  Vec x(a.cols());
  for (std::size_t row = 0; row < e.pivots.size(); ++row)
    x[e.pivots[row]] = e.reduced.at(static_cast<int>(row), a.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw InvariantError("inverse of a non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar(1);
  }
  Echelon e = rref(aug);
  if (static_cast<int>(e.pivots.size()) != n || e.pivots[n - 1] != n - 1)
    throw InvariantError("inverse of a singular matrix");
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = e.reduced.at(r, n + c);
  return inv;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) throw InvariantError("nilpotency of a non-square matrix");
  return m.pow(m.rows()).is_zero();
}

}  // namespace affcryst
