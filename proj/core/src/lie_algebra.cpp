#include "affcryst/lie_algebra.hpp"

#include <random>

#include "affcryst/errors.hpp"

namespace affcryst {

LieAlgebra::LieAlgebra(int n) : n_(n) {
  if (n < 0) throw InvariantError("negative dimension");
  c_.resize(n);
  for (int i = 0; i < n; ++i) c_[i].assign(n, Vec(n));
}

void LieAlgebra::set_bracket(int i, int j, Vec coeffs) {
  if (i < 0 || j <= i || j >= n_)
    throw InvariantError("set_bracket requires 0 <= i < j < n");
  if (static_cast<int>(coeffs.size()) != n_)
    throw InvariantError("bracket coefficient count mismatch");
  c_[i][j] = std::move(coeffs);
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw InvariantError("basis index out of range");
  if (i == j) return Vec(n_);
  if (i < j) return c_[i][j];
  return Scalar(-1) * c_[j][i];
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw InvariantError("bracket operand size mismatch");
  Vec r(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Scalar f = x[i] * y[j];
      Vec b = bracket_basis(i, j);
      for (int k = 0; k < n_; ++k) r[k] += f * b[k];
    }
  }
  return r;
}

Matrix LieAlgebra::ad(int i) const {
  std::vector<Vec> cols(n_);
  for (int j = 0; j < n_; ++j) cols[j] = bracket_basis(i, j);
  return Matrix::from_cols(cols);
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    if (!x[i].is_zero()) m += x[i] * ad(i);
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!is_zero(c_[i][j])) return false;
  return true;
}

bool LieAlgebra::is_automorphism(const Matrix& g) const {
  if (!g.is_square() || g.rows() != n_) return false;
  if (det(g).is_zero()) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (bracket(g.col(i), g.col(j)) != g.apply(bracket_basis(i, j)))
        return false;
  return true;
}

bool LieAlgebra::has_malcev_order() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = 0; k <= j; ++k)
        if (!c_[i][j][k].is_zero()) return false;
  return true;
}

LieValidation validate(const LieAlgebra& lie) {
  const int n = lie.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec jac = lie.bracket(lie.bracket_basis(i, j), Vec(Matrix::identity(n).col(k))) +
                  lie.bracket(lie.bracket_basis(j, k), Vec(Matrix::identity(n).col(i))) +
                  lie.bracket(lie.bracket_basis(k, i), Vec(Matrix::identity(n).col(j)));
        if (!is_zero(jac))
          throw InvariantError("Jacobi identity fails on triple (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(k) + ")");
      }

  LieValidation v;
  std::vector<Vec> current;
  for (int i = 0; i < n; ++i) current.push_back(Matrix::identity(n).col(i));
  v.series.push_back(current);
  while (!current.empty()) {
    // [L, current]
    std::vector<Vec> spanning;
    for (int i = 0; i < n; ++i)
      for (const auto& y : current) {
        Vec b = lie.bracket(Matrix::identity(n).col(i), y);
        if (!is_zero(b)) spanning.push_back(b);
      }
    std::vector<Vec> next;
    if (!spanning.empty()) {
      Echelon e = rref(Matrix::from_rows(spanning));
      for (std::size_t r = 0; r < e.pivots.size(); ++r)
        next.push_back(e.reduced.row(static_cast<int>(r)));
    }
    if (next.size() >= current.size())
      throw InvariantError("algebra is not nilpotent (series stabilizes)");
    v.series.push_back(next);
    current = std::move(next);
  }
  v.nil_class = static_cast<int>(v.series.size()) - 1;
  return v;
}

int nil_class(const LieAlgebra& lie) { return validate(lie).nil_class; }

bool is_valid_grading(const LieAlgebra& lie, const Grading& grading) {
  const int n = lie.dim();
  if (static_cast<int>(grading.weights.size()) != n) return false;
  for (int w : grading.weights)
    if (w < 1) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec b = lie.bracket_basis(i, j);
      for (int k = 0; k < n; ++k)
        if (!b[k].is_zero() &&
            grading.weights[k] != grading.weights[i] + grading.weights[j])
          return false;
    }
  return true;
}

Matrix grading_derivation(const LieAlgebra& lie, const Grading& grading) {
  if (!is_valid_grading(lie, grading))
    throw InvariantError("invalid grading for this algebra");
  Vec d(lie.dim());
  for (int i = 0; i < lie.dim(); ++i)
    d[i] = Scalar(static_cast<long>(grading.weights[i]));
  return Matrix::diagonal(d);
}

LinearRep::LinearRep(LieAlgebra lie, std::vector<Matrix> ops)
    : lie_(std::move(lie)), ops_(std::move(ops)) {
  if (static_cast<int>(ops_.size()) != lie_.dim())
    throw InvariantError("one operator per basis vector required");
  for (const auto& m : ops_)
    if (!m.is_square() || m.rows() != lie_.dim())
      throw InvariantError("operator shape mismatch");
}

Matrix LinearRep::of_vec(const Vec& x) const {
  Matrix m(lie_.dim(), lie_.dim());
  for (int i = 0; i < lie_.dim(); ++i)
    if (!x[i].is_zero()) m += x[i] * ops_[i];
  return m;
}

void LinearRep::require_homomorphism() const {
  const int n = lie_.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix lhs = of_vec(lie_.bracket_basis(i, j));
      Matrix rhs = ops_[i] * ops_[j] - ops_[j] * ops_[i];
      if (lhs != rhs)
        throw InvariantError("not a representation: pair (" + std::to_string(i) +
                             "," + std::to_string(j) + ")");
    }
}

LinearRep LinearRep::adjoint(const LieAlgebra& lie) {
  std::vector<Matrix> ops;
  for (int i = 0; i < lie.dim(); ++i) ops.push_back(lie.ad(i));
  return LinearRep(lie, std::move(ops));
}

LinearRep LinearRep::scaled_adjoint(const LieAlgebra& lie, const Scalar& c) {
  std::vector<Matrix> ops;
  for (int i = 0; i < lie.dim(); ++i) ops.push_back(c * lie.ad(i));
  return LinearRep(lie, std::move(ops));
}

std::vector<Matrix> lie_closure(const std::vector<Matrix>& ms) {
  if (ms.empty()) return {};
  const int sz = ms[0].rows();
  for (const auto& m : ms)
    if (!m.is_square() || m.rows() != sz)
      throw InvariantError("lie_closure needs same-size square matrices");

  auto echelon_basis = [&](const std::vector<Vec>& rows) {
    std::vector<Vec> basis;
    if (rows.empty()) return basis;
    Echelon e = rref(Matrix::from_rows(rows));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis.push_back(e.reduced.row(static_cast<int>(r)));
    return basis;
  };

  std::vector<Vec> rows;
  for (const auto& m : ms)
    if (!m.is_zero()) rows.push_back(m.flatten());
  std::vector<Vec> basis = echelon_basis(rows);

  for (;;) {
    std::vector<Vec> extended = basis;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        Matrix x = Matrix::unflatten(basis[a], sz, sz);
        Matrix y = Matrix::unflatten(basis[b], sz, sz);
        Matrix br = x * y - y * x;
        if (!br.is_zero()) extended.push_back(br.flatten());
      }
    std::vector<Vec> next = echelon_basis(extended);
    if (next.size() == basis.size()) break;
    basis = std::move(next);
  }

  std::vector<Matrix> result;
  for (const auto& row : basis) result.push_back(Matrix::unflatten(row, sz, sz));
  return result;
}

std::vector<Matrix> derivation_space(const LieAlgebra& lie, const LinearRep& phi) {
  phi.require_homomorphism();
  const int n = lie.dim();
  // unknowns D_{rc} at index r*n + c
  std::vector<Vec> eqs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec b = lie.bracket_basis(i, j);
      for (int r = 0; r < n; ++r) {
        Vec eq(n * n);
        for (int c = 0; c < n; ++c) eq[r * n + c] += b[c];   // (D [X_i,X_j])_r
        for (int m = 0; m < n; ++m) {
          eq[m * n + j] -= phi.op(i).at(r, m);               // -(phi_i D X_j)_r
          eq[m * n + i] += phi.op(j).at(r, m);               // +(phi_j D X_i)_r
        }
        eqs.push_back(std::move(eq));
      }
    }
  std::vector<Matrix> basis;
  if (eqs.empty()) {
    for (int k = 0; k < n * n; ++k) {
      Vec v(n * n);
      v[k] = Scalar(1);
      basis.push_back(Matrix::unflatten(v, n, n));
    }
    return basis;
  }
  for (const auto& v : nullspace(Matrix::from_rows(eqs)))
    basis.push_back(Matrix::unflatten(v, n, n));
  return basis;
}

bool is_compatible(const LinearRep& phi, const Matrix& g) {
  if (!phi.algebra().is_automorphism(g))
    throw InvariantError("compatibility requires a Lie algebra automorphism");
  Matrix ginv = inverse(g);
  for (int i = 0; i < phi.algebra().dim(); ++i)
    if (ginv * phi.of_vec(g.col(i)) * g != phi.op(i)) return false;
  return true;
}

NonsingularResult find_nonsingular(const std::vector<Matrix>& space,
                                   const NonsingularSearch& opts) {
  if (space.empty()) throw InvariantError("empty candidate space");
  const int sz = space[0].rows();
  for (const auto& m : space)
    if (!m.is_square() || m.rows() != sz)
      throw InvariantError("candidate space shape mismatch");
  const int k = static_cast<int>(space.size());

  auto combine = [&](const std::vector<long>& t) {
    Matrix m(sz, sz);
    for (int i = 0; i < k; ++i)
      if (t[i] != 0) m += Scalar(t[i]) * space[i];
    return m;
  };

  if (k <= opts.cap) {
    // det(sum t_i B_i) has per-variable degree <= sz, so vanishing on the
    // whole grid {0..sz}^k forces the zero polynomial: "none" is certified.
    std::vector<long> t(k, 0);
    for (;;) {
      Matrix m = combine(t);
      if (!det(m).is_zero()) return {m, true};
      int pos = 0;
      while (pos < k && t[pos] == sz) t[pos++] = 0;
      if (pos == k) break;
      ++t[pos];
    }
    return {std::nullopt, true};
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> coeff(0, 2L * sz);
  for (int s = 0; s < opts.samples; ++s) {
    std::vector<long> t(k);
    for (auto& v : t) v = coeff(rng);
    Matrix m = combine(t);
    if (!det(m).is_zero()) return {m, false};
  }
  return {std::nullopt, false};
}

}  // namespace affcryst
