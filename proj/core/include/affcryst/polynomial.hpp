#ifndef AFFCRYST_POLYNOMIAL_HPP
#define AFFCRYST_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "affcryst/matrix.hpp"

namespace affcryst {

/// Exact univariate polynomial; coeffs[k] is the coefficient of T^k,
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vec coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Scalar& s) { return Polynomial(Vec{s}); }
  static Polynomial variable() { return Polynomial(Vec{Scalar(0), Scalar(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Scalar(0);
  }
  Scalar leading() const;
  const Vec& coeffs() const { return c_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend bool operator==(const Polynomial& x, const Polynomial& y) {
    return x.c_ == y.c_;
  }
  friend bool operator!=(const Polynomial& x, const Polynomial& y) {
    return !(x == y);
  }

  Polynomial derivative() const;
  Polynomial monic() const;

  Scalar eval(const Scalar& x) const;
  Matrix eval(const Matrix& m) const;  ///< Horner on a square matrix

  std::string str() const;  ///< e.g. "T^2-4*T+4"

 private:
  void trim();
  Vec c_;
};

/// Quotient and remainder; the divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num,
                                         const Polynomial& den);

/// Monic gcd by Euclid's algorithm.
Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'), monic. Throws on the zero polynomial.
Polynomial squarefree_part(const Polynomial& p);

/// Monic characteristic polynomial det(T*I - m), Faddeev-LeVerrier.
Polynomial char_poly(const Matrix& m);

}  // namespace affcryst

#endif
