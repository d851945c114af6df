#ifndef AFFCRYST_SCALAR_HPP
#define AFFCRYST_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace affcryst {

/// An exact field element: either a rational, or a + b*sqrt(d) in a real
/// quadratic field Q(sqrt(d)) with d a fixed square-free positive integer.
///
/// Components are canonical GMP rationals (lowest terms, positive
/// denominator), so equality is component-wise. A value with b == 0 carries
/// d == 0 and mixes freely with any field; combining two values with
/// distinct nonzero d throws.
class Scalar {
 public:
  Scalar() : d_(0) {}
  Scalar(long v) : a_(v), d_(0) {}                      // NOLINT(runtime/explicit)
  Scalar(long num, long den);                          ///< num/den, canonicalized
  explicit Scalar(const mpq_class& a) : a_(a), d_(0) {}
  Scalar(const mpq_class& a, const mpq_class& b, long d);

  static Scalar sqrt_d(long d) { return Scalar(0, 1, d); }

  const mpq_class& rat() const { return a_; }
  const mpq_class& surd() const { return b_; }
  long disc() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return d_ == 0; }
  bool is_one() const { return d_ == 0 && a_ == 1; }

  /// Galois conjugate a - b*sqrt(d).
  Scalar conj() const { return Scalar(a_, -b_, d_); }
  /// Field norm a^2 - d*b^2 (a rational).
  Scalar norm() const;

  Scalar operator-() const { return Scalar(-a_, -b_, d_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// "p" or "p/q" for rationals; "a+b*sqrt(d)" style for quadratics.
  std::string str() const;

 private:
  void normalize();

  mpq_class a_;
  mpq_class b_;
  long d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "p" or "p/q" (optional sign, arbitrary precision). Throws ParseError.
mpq_class parse_rational(const std::string& text);

/// Rational text form, "p" when the denominator is 1.
std::string rational_str(const mpq_class& q);

/// Common discriminant of two values; throws InvariantError on a clash.
long merge_disc(long d1, long d2);

}  // namespace affcryst

#endif
