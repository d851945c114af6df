#include "affcryst/polynomial.hpp"

#include <sstream>

#include "affcryst/errors.hpp"

namespace affcryst {

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::leading() const {
  if (is_zero()) throw InvariantError("leading coefficient of zero polynomial");
  return c_.back();
}

Polynomial Polynomial::operator-() const {
  Vec r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return Polynomial();
  Vec r(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  Vec r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = Scalar(static_cast<long>(i)) * c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Scalar linv = leading().inverse();
  Vec r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = linv * c_[i];
  return Polynomial(std::move(r));
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Matrix Polynomial::eval(const Matrix& m) const {
  if (!m.is_square()) throw InvariantError("polynomial of a non-square matrix");
  Matrix r(m.rows(), m.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * m;
    for (int i = 0; i < m.rows(); ++i) r.at(i, i) += *it;
  }
  return r;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    std::string t = c_[k].str();
    if (!first && t[0] != '-') os << "+";
    if (k == 0) {
      os << t;
    } else {
      if (t == "1") {
      } else if (t == "-1") {
        os << "-";
      } else {
        os << t << "*";
      }
      os << "T";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num,
                                         const Polynomial& den) {
  if (den.is_zero()) throw InvariantError("polynomial division by zero");
  Polynomial rem = num;
  Vec q(num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0);
  Scalar linv = den.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Scalar f = rem.leading() * linv;
    q[shift] = f;
    Vec sub(shift + den.degree() + 1);
    for (int i = 0; i <= den.degree(); ++i) sub[shift + i] = f * den.coeff(i);
    rem -= Polynomial(std::move(sub));
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw InvariantError("squarefree part of zero polynomial");
  Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square())
    throw InvariantError("characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  Vec coeffs(n + 1);
  coeffs[n] = Scalar(1);
  Matrix mk = m;
  for (int k = 1; k <= n; ++k) {
    Scalar ck = Scalar(-1, static_cast<long>(k)) * mk.trace();
    coeffs[n - k] = ck;
    if (k < n) {
      for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
      mk = m * mk;
    }
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace affcryst
