#include "affcryst/shadow.hpp"

#include "affcryst/errors.hpp"
#include "affcryst/jordan.hpp"

namespace affcryst {

PolycyclicRep::PolycyclicRep(int n, std::vector<AffineMap> generators,
                             int supplement_size)
    : n_(n), gens_(std::move(generators)), supplement_(supplement_size) {
  if (supplement_ < 0 || supplement_ > static_cast<int>(gens_.size()))
    throw InvariantError("supplement size out of range");
  for (const auto& g : gens_) {
    if (g.dim() != n_) throw InvariantError("generator dimension mismatch");
    if (det(g.matrix()).is_zero())
      throw InvariantError("singular generator");
  }
  for (std::size_t i = supplement_; i < gens_.size(); ++i)
    if (!gens_[i].is_unipotent())
      throw InvariantError("Fitting generator " + std::to_string(i) +
                           " is not unipotent");
}

std::vector<AffineMap> unipotent_shadow(const PolycyclicRep& rep) {
  std::vector<AffineMap> shadow;
  shadow.reserve(rep.generators().size());
  const int s = rep.supplement_size();
  for (std::size_t i = 0; i < rep.generators().size(); ++i) {
    const AffineMap& g = rep.generators()[i];
    if (static_cast<int>(i) >= s || g.is_unipotent()) {
      shadow.push_back(g);
      continue;
    }
    // The unipotent Jordan part of an affine map is again affine: the last
    // row is a left 1-eigenvector, which every polynomial in g preserves.
    shadow.push_back(AffineMap(jordan_decompose(g.matrix()).unipotent));
  }
  return shadow;
}

PolycyclicRep conjugate(const PolycyclicRep& rep, const AffineMap& g) {
  AffineMap ginv = g.inverse();
  std::vector<AffineMap> gens;
  gens.reserve(rep.generators().size());
  for (const auto& x : rep.generators()) gens.push_back(g * x * ginv);
  return PolycyclicRep(rep.dim(), std::move(gens), rep.supplement_size());
}

namespace {

std::vector<AffineLieElement> shadow_closure(const PolycyclicRep& rep) {
  std::vector<Matrix> logs;
  for (const auto& theta : unipotent_shadow(rep))
    logs.push_back(log_unipotent(theta.matrix()));
  std::vector<AffineLieElement> basis;
  for (const auto& m : lie_closure(logs)) basis.push_back(AffineLieElement(m));
  return basis;
}

}  // namespace

PolyVerdict is_crystallographic(const PolycyclicRep& rep) {
  std::vector<AffineLieElement> basis = shadow_closure(rep);
  PolyVerdict v;
  v.shadow_dim = static_cast<int>(basis.size());
  std::vector<Matrix> ms;
  for (const auto& b : basis) ms.push_back(b.matrix());
  v.engel_ok = engel_flag(ms).ok;
  if (!v.engel_ok || v.shadow_dim != rep.dim()) return v;
  std::vector<Vec> cols;
  for (const auto& b : basis) cols.push_back(b.translation_part());
  v.delta = det(Matrix::from_cols(cols));
  v.crystallographic = !v.delta.is_zero();
  return v;
}

HullActionData hull_action(const PolycyclicRep& rep) {
  if (!is_crystallographic(rep).crystallographic)
    throw InvariantError("hull action requires a crystallographic representation");
  HullActionData data;
  data.basis = shadow_closure(rep);
  std::vector<Vec> flat;
  for (const auto& b : data.basis) flat.push_back(b.matrix().flatten());
  Matrix coords = Matrix::from_cols(flat);

  for (const auto& g : rep.generators()) {
    Matrix ginv = inverse(g.matrix());
    std::vector<Vec> action_cols;
    for (const auto& b : data.basis) {
      Matrix conj = g.matrix() * b.matrix() * ginv;
      std::optional<Vec> x = solve(coords, conj.flatten());
      if (!x)
        throw InvariantError(
            "generator conjugation does not preserve the shadow closure");
      action_cols.push_back(*x);
    }
    data.action.push_back(Matrix::from_cols(action_cols));
  }
  return data;
}

bool char_restriction_check(const AffineMap& g, const Matrix& a) {
  if (!a.is_square() || a.rows() != g.dim())
    throw InvariantError("hull action size mismatch");
  Polynomial t_minus_1(Vec{Scalar(-1), Scalar(1)});
  return char_poly(g.matrix()) == char_poly(a) * t_minus_1;
}

}  // namespace affcryst
