#include "affcryst/scalar.hpp"

#include <ostream>
#include <sstream>

#include "affcryst/errors.hpp"

namespace affcryst {

Scalar::Scalar(long num, long den) : d_(0) {
  if (den == 0) throw InvariantError("rational with zero denominator");
  a_ = mpq_class(num, den);
  a_.canonicalize();
}

Scalar::Scalar(const mpq_class& a, const mpq_class& b, long d)
    : a_(a), b_(b), d_(d) {
  normalize();
}

void Scalar::normalize() {
  if (sgn(b_) == 0) {
    d_ = 0;
  } else if (d_ <= 0) {
    throw InvariantError("quadratic part requires a positive discriminant");
  }
}

long merge_disc(long d1, long d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw InvariantError("mixed field discriminants " + std::to_string(d1) +
                       " and " + std::to_string(d2));
}

Scalar Scalar::norm() const {
  mpq_class n = a_ * a_ - mpq_class(d_) * b_ * b_;
  return Scalar(n);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvariantError("division by zero");
  if (d_ == 0) return Scalar(mpq_class(1 / a_));
  // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - d b^2); the norm cannot vanish
  // for a nonzero element since d is not a rational square.
  mpq_class n = a_ * a_ - mpq_class(d_) * b_ * b_;
  if (sgn(n) == 0) throw InternalError("zero norm in quadratic inverse");
  return Scalar(a_ / n, -b_ / n, d_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = merge_disc(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = merge_disc(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  long d = merge_disc(d_, o.d_);
  mpq_class a = a_ * o.a_ + mpq_class(d) * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string Scalar::str() const {
  if (d_ == 0) return rational_str(a_);
  std::ostringstream os;
  os << rational_str(a_);
  os << (sgn(b_) < 0 ? "-" : "+");
  mpq_class babs = abs(b_);
  if (babs != 1) os << rational_str(babs) << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& part, bool sign_ok) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!check_int(num, true) || !check_int(den, false) || den == "0")
    throw ParseError("bad rational literal '" + text + "'");
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

}  // namespace affcryst
