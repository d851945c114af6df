#include "affcryst/constructions.hpp"

#include <sstream>

#include "affcryst/errors.hpp"

namespace affcryst {

namespace {

AffineRep rep_from_pair(const LieAlgebra& lie, const LinearRep& phi,
                        const Matrix& d) {
  std::vector<AffineLieElement> images;
  images.reserve(lie.dim());
  for (int i = 0; i < lie.dim(); ++i)
    images.push_back(AffineLieElement(phi.op(i), d.col(i)));
  return AffineRep(lie, std::move(images));
}

bool is_derivation_for(const LieAlgebra& lie, const LinearRep& phi,
                       const Matrix& d) {
  for (int i = 0; i < lie.dim(); ++i)
    for (int j = i + 1; j < lie.dim(); ++j) {
      Vec lhs = d.apply(lie.bracket_basis(i, j));
      Vec rhs = phi.op(i).apply(d.col(j)) - phi.op(j).apply(d.col(i));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

AffineRep two_step_rep(const LieAlgebra& lie) {
  if (nil_class(lie) > 2)
    throw InvariantError("two_step_rep requires nilpotency class <= 2");
  LinearRep phi = LinearRep::scaled_adjoint(lie, Scalar(1, 2));
  return rep_from_pair(lie, phi, Matrix::identity(lie.dim()));
}

AffineRep derivation_rep(const LieAlgebra& lie, const Matrix& d) {
  validate(lie);
  LinearRep ad = LinearRep::adjoint(lie);
  if (!d.is_square() || d.rows() != lie.dim())
    throw InvariantError("derivation shape mismatch");
  if (!is_derivation_for(lie, ad, d))
    throw InvariantError("not a derivation of the algebra");
  if (det(d).is_zero()) throw InvariantError("derivation must be nonsingular");
  return rep_from_pair(lie, ad, d);
}

AffineRep graded_rep(const LieAlgebra& lie, const Grading& grading) {
  return derivation_rep(lie, grading_derivation(lie, grading));
}

ThreeStepResult three_step_rep(const LieAlgebra& lie,
                               const std::vector<Scalar>& grid) {
  LieValidation v = validate(lie);
  if (v.nil_class > 3)
    throw InvariantError("three_step_rep requires nilpotency class <= 3");
  const int n = lie.dim();

  // V3 = third series term; V2, V1 fill up the larger terms by greedy
  // extension in the given order.
  std::vector<Vec> adapted;
  std::vector<int> block;  // 1, 2 or 3 per adapted vector
  auto try_extend = [&](const Vec& cand, int blk) {
    std::vector<Vec> trial = adapted;
    trial.push_back(cand);
    if (rank(Matrix::from_cols(trial)) == static_cast<int>(trial.size())) {
      adapted.push_back(cand);
      block.push_back(blk);
    }
  };
  auto series_term = [&](std::size_t k) {
    return k < v.series.size() ? v.series[k] : std::vector<Vec>{};
  };
  for (const auto& x : series_term(2)) try_extend(x, 3);
  for (const auto& x : series_term(1)) try_extend(x, 2);
  for (int i = 0; i < n; ++i) try_extend(Matrix::identity(n).col(i), 1);
  Matrix s = Matrix::from_cols(adapted);
  Matrix sinv = inverse(s);

  std::vector<Scalar> scales = grid;
  if (scales.empty())
    scales = {Scalar(1), Scalar(2), Scalar(3), Scalar(1, 2), Scalar(1, 3)};

  std::ostringstream tried;
  for (const auto& alpha : scales)
    for (const auto& beta : scales)
      for (const auto& gamma : scales) {
        Vec diag(n);
        for (int i = 0; i < n; ++i)
          diag[i] = block[i] == 1 ? alpha : (block[i] == 2 ? beta : gamma);
        Matrix g = s * Matrix::diagonal(diag) * sinv;
        Matrix ginv = inverse(g);
        std::vector<Matrix> ops;
        for (int i = 0; i < n; ++i) ops.push_back(g * lie.ad(i) * ginv);
        LinearRep phi(lie, std::move(ops));
        std::vector<Matrix> ders = derivation_space(lie, phi);
        if (ders.empty()) {
          tried << " (" << alpha << "," << beta << "," << gamma << ")";
          continue;
        }
        NonsingularResult d = find_nonsingular(ders);
        if (!d.element) {
          tried << " (" << alpha << "," << beta << "," << gamma << ")";
          continue;
        }
        return {rep_from_pair(lie, phi, *d.element),
                {alpha, beta, gamma, g, *d.element}};
      }
  throw InvariantError("three_step grid exhausted; tried" + tried.str());
}

}  // namespace affcryst
