#ifndef AFFCRYST_MATRIX_HPP
#define AFFCRYST_MATRIX_HPP

#include <optional>
#include <vector>

#include "affcryst/scalar.hpp"

namespace affcryst {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(const Scalar& c, const Vec& x);
bool is_zero(const Vec& x);

/// Dense exact matrix over Q or Q(sqrt(d)).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_cols(const std::vector<Vec>& cols);
  static Matrix diagonal(const Vec& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Scalar& at(int r, int c) { return e_[r * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[r * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;
  Matrix transpose() const;
  Scalar trace() const;
  Matrix pow(int k) const;

  /// Row-major flattening; unflatten is the inverse for matching shapes.
  Vec flatten() const { return e_; }
  static Matrix unflatten(const Vec& v, int rows, int cols);

  Vec apply(const Vec& x) const;  ///< matrix * column vector

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Scalar& c, Matrix m);
  Matrix operator-() const;
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> e_;
};

/// Exact determinant by Gaussian elimination with pivoting.
Scalar det(const Matrix& m);

/// Inverse; throws InvariantError on singular input.
Matrix inverse(const Matrix& m);

bool is_nilpotent(const Matrix& m);

struct Echelon {
  Matrix reduced;              ///< reduced row echelon form
  std::vector<int> pivots;     ///< pivot column per nonzero row
};
Echelon rref(Matrix m);

int rank(const Matrix& m);

/// Basis of the exact kernel, each vector scaled so its first nonzero
/// entry is 1; empty when the kernel is trivial.
std::vector<Vec> nullspace(const Matrix& m);

/// One exact solution of A x = b with free variables set to 0,
/// or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace affcryst

#endif
