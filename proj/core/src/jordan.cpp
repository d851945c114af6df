#include "affcryst/jordan.hpp"

#include "affcryst/errors.hpp"

namespace affcryst {

namespace {

int newton_steps(int n) {
  int steps = 0;
  int reach = 1;
  while (reach < n + 1) {
    reach *= 2;
    ++steps;
  }
  return steps;
}

Polynomial poly_mod(const Polynomial& p, const Polynomial& mod) {
  return divmod(p, mod).second;
}

/// f(p) reduced mod chi, Horner over the quotient ring.
Polynomial compose_mod(const Polynomial& f, const Polynomial& p,
                       const Polynomial& chi) {
  Polynomial r;
  for (int k = f.degree(); k >= 0; --k) {
    r = poly_mod(r * p, chi);
    r += Polynomial::constant(f.coeff(k));
  }
  return r;
}

/// (g, u) with u*a = g mod b, g = gcd(a, b) monic.
std::pair<Polynomial, Polynomial> half_egcd(Polynomial a, Polynomial b) {
  Polynomial u0 = Polynomial::constant(Scalar(1));
  Polynomial u1;
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    Polynomial u2 = u0 - q * u1;
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  Scalar linv = a.leading().inverse();
  return {Polynomial::constant(linv) * a, Polynomial::constant(linv) * u0};
}

}  // namespace

JordanParts jordan_decompose(const Matrix& g) {
  if (!g.is_square()) throw InvariantError("Jordan decomposition needs a square matrix");
  if (det(g).is_zero()) throw InvariantError("Jordan decomposition of a singular matrix");
  const int n = g.rows();
  const Polynomial f = squarefree_part(char_poly(g));
  const Polynomial fp = f.derivative();

  Matrix x = g;
  for (int step = newton_steps(n); step > 0; --step) {
    Matrix fx = f.eval(x);
    if (fx.is_zero()) break;
    Matrix d = fp.eval(x);
    Matrix dinv;
    try {
      dinv = inverse(d);
    } catch (const InvariantError&) {
      throw InternalError("Jordan Newton step hit a singular derivative");
    }
    x -= fx * dinv;
  }
  if (!f.eval(x).is_zero())
    throw InternalError("Jordan Newton iteration failed to converge");

  Matrix gs = x;
  Matrix gu = Matrix::identity(n) + inverse(gs) * (g - gs);
  return {std::move(gs), std::move(gu)};
}

MatrixClass classify(const Matrix& g) {
  if (!g.is_square()) throw InvariantError("classify needs a square matrix");
  if (is_nilpotent(g - Matrix::identity(g.rows()))) return MatrixClass::Unipotent;
  if (squarefree_part(char_poly(g)).eval(g).is_zero())
    return MatrixClass::Semisimple;
  return MatrixClass::Mixed;
}

std::pair<Polynomial, Polynomial> jordan_polynomials(const Polynomial& chi) {
  if (chi.is_zero() || chi.degree() < 1)
    throw InvariantError("need a nonconstant characteristic polynomial");
  const Polynomial f = squarefree_part(chi);
  const Polynomial fp = f.derivative();
  Polynomial p = Polynomial::variable();
  for (int step = newton_steps(chi.degree()); step > 0; --step) {
    Polynomial fx = compose_mod(f, p, chi);
    if (fx.is_zero()) break;
    Polynomial fpx = compose_mod(fp, p, chi);
    auto [g, u] = half_egcd(fpx, chi);
    if (g.degree() != 0)
      throw InternalError("derivative not invertible modulo the characteristic polynomial");
    p = poly_mod(p - fx * u, chi);
  }
  if (!compose_mod(f, p, chi).is_zero())
    throw InternalError("Jordan polynomial iteration failed to converge");
  Polynomial q = poly_mod(Polynomial::variable() - p, chi);
  return {p, q};
}

FlagResult engel_flag(const std::vector<Matrix>& ms) {
  if (ms.empty()) return {true, Matrix()};
  const int n = ms[0].rows();
  for (const auto& m : ms)
    if (!m.is_square() || m.rows() != n)
      throw InvariantError("engel_flag needs same-size square matrices");

  std::vector<Vec> flag;  // basis so far, stage by stage
  while (static_cast<int>(flag.size()) < n) {
    // rows of proj span the annihilator of span(flag); v lands in
    // span(flag) exactly when proj * v = 0
    Matrix proj;
    if (flag.empty()) {
      proj = Matrix::identity(n);
    } else {
      std::vector<Vec> left = nullspace(Matrix::from_cols(flag).transpose());
      if (left.empty()) break;  // flag already spans everything
      proj = Matrix::from_rows(left);
    }
    std::vector<Vec> stacked;
    for (const auto& m : ms) {
      Matrix pm = proj * m;
      for (int r = 0; r < pm.rows(); ++r) stacked.push_back(pm.row(r));
    }
    std::vector<Vec> kernel = nullspace(Matrix::from_rows(stacked));

    // extend the flag by kernel vectors that are new
    std::size_t before = flag.size();
    for (const auto& v : kernel) {
      std::vector<Vec> trial = flag;
      trial.push_back(v);
      if (rank(Matrix::from_cols(trial)) == static_cast<int>(trial.size()))
        flag.push_back(v);
    }
    if (flag.size() == before) return {false, Matrix()};
  }
  return {true, Matrix::from_cols(flag)};
}

}  // namespace affcryst
