#include "affcryst/affine_rep.hpp"

#include <string>

#include "affcryst/errors.hpp"
#include "affcryst/jordan.hpp"

namespace affcryst {

AffineRep::AffineRep(LieAlgebra lie, std::vector<AffineLieElement> images)
    : lie_(std::move(lie)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != lie_.dim())
    throw InvariantError("one image per basis vector required");
  for (const auto& y : images_)
    if (y.dim() != lie_.dim())
      throw InvariantError("ambient dimension must equal the algebra dimension");
}

AffineLieElement AffineRep::image_of(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim())
    throw InvariantError("coefficient vector size mismatch");
  AffineLieElement r = AffineLieElement::zero(dim());
  for (int i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) r = r + x[i] * images_[i];
  return r;
}

AffineRep::Validation AffineRep::validate() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j) {
      AffineLieElement lhs = image_of(lie_.bracket_basis(i, j));
      if (lhs != bracket(images_[i], images_[j])) return {false, i, j};
    }
  return {};
}

void AffineRep::require_valid() const {
  Validation v = validate();
  if (!v.ok)
    throw InvariantError("not a representation: bracket pair (" +
                         std::to_string(v.i) + "," + std::to_string(v.j) + ")");
}

std::vector<AffineMap> AffineRep::generators() const {
  std::vector<AffineMap> gens;
  gens.reserve(images_.size());
  for (const auto& y : images_) gens.push_back(exp_nilpotent(y));
  return gens;
}

Matrix orbit_matrix(const AffineRep& rep, const Vec& x) {
  rep.require_valid();
  if (static_cast<int>(x.size()) != rep.dim())
    throw InvariantError("base point dimension mismatch");
  std::vector<Vec> cols;
  cols.reserve(rep.images().size());
  for (const auto& y : rep.images()) cols.push_back(y.orbit_at(x));
  return Matrix::from_cols(cols);
}

namespace {

bool engel_on_images(const AffineRep& rep) {
  std::vector<Matrix> ms;
  ms.reserve(rep.images().size());
  for (const auto& y : rep.images()) ms.push_back(y.matrix());
  return engel_flag(ms).ok;
}

}  // namespace

Scalar etale_det(const AffineRep& rep) {
  rep.require_valid();
  if (!engel_on_images(rep))
    throw InvariantError("images are not simultaneously nilpotent");
  return det(orbit_matrix(rep, Vec(rep.dim())));
}

CrystVerdict is_crystallographic(const AffineRep& rep) {
  rep.require_valid();
  CrystVerdict v;
  v.engel_ok = engel_on_images(rep);
  if (!v.engel_ok) return v;
  v.delta = det(orbit_matrix(rep, Vec(rep.dim())));
  v.crystallographic = !v.delta.is_zero();
  return v;
}

AffineRep conjugate(const AffineRep& rep, const AffineMap& g) {
  Matrix ginv = inverse(g.matrix());
  std::vector<AffineLieElement> images;
  images.reserve(rep.images().size());
  for (const auto& y : rep.images())
    images.push_back(AffineLieElement(g.matrix() * y.matrix() * ginv));
  return AffineRep(rep.algebra(), std::move(images));
}

AffineRep precompose(const AffineRep& rep, const Matrix& phi) {
  if (!rep.algebra().is_automorphism(phi))
    throw InvariantError("precompose requires a Lie algebra automorphism");
  Matrix phinv = inverse(phi);
  std::vector<AffineLieElement> images;
  images.reserve(rep.dim());
  for (int i = 0; i < rep.dim(); ++i)
    images.push_back(rep.image_of(phinv.col(i)));
  return AffineRep(rep.algebra(), std::move(images));
}

ConjugatorResult find_conjugator(const AffineRep& a, const AffineRep& b,
                                 const NonsingularSearch& opts) {
  a.require_valid();
  b.require_valid();
  if (a.dim() != b.dim()) throw InvariantError("dimension mismatch");
  const int n = a.dim();
  const int sz = n + 1;

  // Unknown G has the shape [[H, v], [0, s]]: the fixed zeros of the last
  // row are excluded, the corner scale s stays free so the intertwiner
  // system A'G = GA is homogeneous; a nonsingular solution has s != 0 and
  // is rescaled to an affine map afterwards.
  std::vector<int> unknown_pos;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < sz; ++c) unknown_pos.push_back(r * sz + c);
  unknown_pos.push_back(n * sz + n);
  const int unknowns = static_cast<int>(unknown_pos.size());
  std::vector<int> pos_to_unknown(sz * sz, -1);
  for (int u = 0; u < unknowns; ++u) pos_to_unknown[unknown_pos[u]] = u;

  std::vector<AffineMap> gens_a = a.generators();
  std::vector<AffineMap> gens_b = b.generators();

  std::vector<Vec> eqs;
  for (int g = 0; g < n; ++g) {
    const Matrix& am = gens_a[g].matrix();
    const Matrix& bm = gens_b[g].matrix();
    for (int r = 0; r < sz; ++r)
      for (int c = 0; c < sz; ++c) {
        Vec eq(unknowns);
        for (int m = 0; m < sz; ++m) {
          int p1 = pos_to_unknown[m * sz + c];
          if (p1 >= 0) eq[p1] += bm.at(r, m);  // (A' G)_{rc}
          int p2 = pos_to_unknown[r * sz + m];
          if (p2 >= 0) eq[p2] -= am.at(m, c);  // -(G A)_{rc}
        }
        if (!is_zero(eq)) eqs.push_back(std::move(eq));
      }
  }

  std::vector<Matrix> space;
  if (eqs.empty()) {
    for (int u = 0; u < unknowns; ++u) {
      Vec v(sz * sz);
      v[unknown_pos[u]] = Scalar(1);
      space.push_back(Matrix::unflatten(v, sz, sz));
    }
  } else {
    for (const auto& sol : nullspace(Matrix::from_rows(eqs))) {
      Vec full(sz * sz);
      for (int u = 0; u < unknowns; ++u) full[unknown_pos[u]] = sol[u];
      space.push_back(Matrix::unflatten(full, sz, sz));
    }
  }
  if (space.empty()) return {std::nullopt, true};

  NonsingularResult found = find_nonsingular(space, opts);
  if (!found.element) return {std::nullopt, found.exhaustive};

  Matrix g = found.element->at(n, n).inverse() * *found.element;
  AffineMap witness(g);
  Matrix ginv = inverse(g);
  for (int i = 0; i < n; ++i)
    if (g * a.images()[i].matrix() * ginv != b.images()[i].matrix())
      throw InternalError("conjugator witness failed the exact recheck");
  return {witness, found.exhaustive};
}

}  // namespace affcryst
