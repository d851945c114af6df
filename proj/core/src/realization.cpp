#include "affcryst/realization.hpp"

#include <string>

#include "affcryst/errors.hpp"

namespace affcryst {

ConjugatorResult fixed_point_check(const AffineRep& rep, const Matrix& phi,
                                   const NonsingularSearch& opts) {
  if (!is_crystallographic(rep).crystallographic)
    throw InvariantError("fixed point check requires a crystallographic representation");
  return find_conjugator(rep, precompose(rep, phi), opts);
}

AffineMap finite_order_correction(const AffineMap& ghat, int k) {
  if (k < 1) throw InvariantError("order must be positive");
  AffineMap s = ghat.pow(k);
  if (!s.is_unipotent())
    throw InvariantError("power ghat^k is not unipotent");
  Matrix corr = exp_nilpotent(Scalar(-1, k) * log_unipotent(s.matrix()));
  AffineMap g = AffineMap(corr) * ghat;
  if (g.pow(k) != AffineMap::identity(ghat.dim()))
    throw InternalError("finite order correction failed");
  return g;
}

namespace {

void require_exact_order(const Matrix& phi, int k) {
  if (k < 1) throw InvariantError("declared order must be positive");
  Matrix p = Matrix::identity(phi.rows());
  for (int m = 1; m < k; ++m) {
    p = p * phi;
    if (p == Matrix::identity(phi.rows()))
      throw InvariantError("automorphism order is smaller than declared");
  }
  if (p * phi != Matrix::identity(phi.rows()))
    throw InvariantError("automorphism does not have the declared order");
}

}  // namespace

ExtensionResult build_split_extension(const ExtensionSpec& spec,
                                      const std::vector<AffineMap>& lifts) {
  spec.base.require_valid();
  const int n = spec.base.dim();
  const std::size_t m = spec.autos.size();
  if (lifts.size() != m)
    throw InvariantError("one lift per automorphism required");

  std::vector<AffineMap> base_gens = spec.base.generators();

  for (std::size_t j = 0; j < m; ++j) {
    const Matrix& phi = spec.autos[j].phi;
    if (!spec.base.algebra().is_automorphism(phi))
      throw InvariantError("entry " + std::to_string(j) +
                           " is not a Lie algebra automorphism");
    require_exact_order(phi, spec.autos[j].order);

    AffineMap linv = lifts[j].inverse();
    for (int i = 0; i < n; ++i) {
      AffineMap expected = exp_nilpotent(spec.base.image_of(phi.col(i)));
      if (lifts[j] * base_gens[i] * linv != expected)
        throw InvariantError("lift " + std::to_string(j) +
                             " does not realize its automorphism on generator " +
                             std::to_string(i));
    }
    if (!lifts[j].pow(spec.autos[j].order).is_unipotent())
      throw InvariantError("lift " + std::to_string(j) +
                           " has wrong order: its declared power is not unipotent");
  }

  std::vector<AffineMap> gens = lifts;
  gens.insert(gens.end(), base_gens.begin(), base_gens.end());

  ExtensionResult result;
  result.generators = gens;
  result.all_ok = true;
  for (const auto& word : spec.relations) {
    AffineMap value = AffineMap::identity(n);
    for (int letter : word) {
      int idx = letter > 0 ? letter : -letter;
      if (idx < 1 || idx > static_cast<int>(gens.size()))
        throw InvariantError("relation letter out of range");
      const AffineMap& gen = gens[idx - 1];
      value = value * (letter > 0 ? gen : gen.inverse());
    }
    RelationReport report;
    report.word = word;
    report.ok = value == AffineMap::identity(n);
    report.residual = value.matrix();
    result.all_ok = result.all_ok && report.ok;
    result.relations.push_back(std::move(report));
  }
  return result;
}

std::vector<AffineMap> construct_lifts(const ExtensionSpec& spec,
                                       const std::vector<AffineMap>& conjugators) {
  const int n = spec.base.dim();
  const std::size_t m = spec.autos.size();
  if (conjugators.size() != m)
    throw InvariantError("one conjugator per automorphism required");

  std::vector<AffineMap> lifts;
  for (std::size_t j = 0; j < m; ++j) {
    AffineMap raw = conjugators[j].inverse();
    AffineMap power = raw.pow(spec.autos[j].order);
    lifts.push_back(power.is_unipotent()
                        ? finite_order_correction(raw, spec.autos[j].order)
                        : raw);
  }

  // Translation directions that centralize every base generator:
  // t_c exp(Y_i) t_c^{-1} = exp(Y_i) exactly when (I - B_i) c = 0.
  std::vector<AffineMap> base_gens = spec.base.generators();
  std::vector<Vec> rows;
  for (const auto& g : base_gens) {
    Matrix diff = Matrix::identity(n) - g.linear_part();
    for (int r = 0; r < n; ++r) rows.push_back(diff.row(r));
  }
  std::vector<Vec> central = nullspace(Matrix::from_rows(rows));
  if (central.empty()) return lifts;
  Matrix t_basis = Matrix::from_cols(central);
  const int tdim = t_basis.cols();

  // Relation values as affine-linear functions of the per-lift adjustment
  // coordinates y_j (c_j = t_basis y_j); one stacked exact solve.
  std::vector<Vec> eq_rows;
  Vec eq_rhs;
  for (const auto& word : spec.relations) {
    Matrix lin = Matrix::identity(n);
    Vec trans(n);
    std::vector<Matrix> coeff(m, Matrix(n, tdim));
    auto push_factor = [&](const Matrix& q, const Vec& w,
                           const Matrix& wcoeff, int j) {
      // factor translation is w + wcoeff * y_j
      if (j >= 0) coeff[j] += lin * wcoeff;
      trans = trans + lin.apply(w);
      lin = lin * q;
    };
    bool bad = false;
    for (int letter : word) {
      int idx = letter > 0 ? letter : -letter;
      if (idx < 1 || idx > static_cast<int>(m + base_gens.size())) {
        bad = true;
        break;
      }
      if (idx > static_cast<int>(m)) {
        const AffineMap& g = base_gens[idx - 1 - m];
        AffineMap f = letter > 0 ? g : g.inverse();
        push_factor(f.linear_part(), f.translation_part(), Matrix(n, tdim), -1);
      } else {
        const AffineMap& q = lifts[idx - 1];
        if (letter > 0) {
          push_factor(q.linear_part(), q.translation_part(), t_basis, idx - 1);
        } else {
          Matrix qinv = inverse(q.linear_part());
          push_factor(qinv, Scalar(-1) * qinv.apply(q.translation_part()),
                      -(qinv * t_basis), idx - 1);
        }
      }
    }
    if (bad || lin != Matrix::identity(n)) continue;  // cannot close; verify later
    for (int r = 0; r < n; ++r) {
      Vec row(m * tdim);
      for (std::size_t j = 0; j < m; ++j)
        for (int c = 0; c < tdim; ++c) row[j * tdim + c] = coeff[j].at(r, c);
      eq_rows.push_back(std::move(row));
      eq_rhs.push_back(-trans[r]);
    }
  }
  if (eq_rows.empty()) return lifts;
  std::optional<Vec> y = solve(Matrix::from_rows(eq_rows), eq_rhs);
  if (!y) return lifts;

  for (std::size_t j = 0; j < m; ++j) {
    Vec yj(tdim);
    for (int c = 0; c < tdim; ++c) yj[c] = (*y)[j * tdim + c];
    Vec cj = t_basis.apply(yj);
    lifts[j] = AffineMap::translation(cj) * lifts[j];
  }
  return lifts;
}

}  // namespace affcryst
