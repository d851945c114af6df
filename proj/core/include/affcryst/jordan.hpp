#ifndef AFFCRYST_JORDAN_HPP
#define AFFCRYST_JORDAN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "affcryst/polynomial.hpp"

namespace affcryst {

struct JordanParts {
  Matrix semisimple;  ///< g_s
  Matrix unipotent;   ///< g_u, with g = g_s * g_u = g_u * g_s
};

/// Multiplicative Jordan-Chevalley decomposition of an invertible matrix.
///
/// The additive semisimple part is the limit of the Newton iteration
/// x <- x - f(x) f'(x)^{-1} on f = squarefree_part(char_poly(g)) started
/// at x = g; ceil(log2(n+1)) steps reach the fixed point exactly because
/// f(x) squares its nilpotency order each step. Then g_u = I + g_s^{-1}(g - g_s).
JordanParts jordan_decompose(const Matrix& g);

enum class MatrixClass { Semisimple, Unipotent, Mixed };

/// Semisimple iff the squarefree part of the characteristic polynomial
/// annihilates g; unipotent iff (g - I)^n = 0; mixed otherwise.
MatrixClass classify(const Matrix& g);

/// The pair (P, Q) with g_s = P(g), g_n = Q(g) for every g with the given
/// characteristic polynomial; P is computed by running the same Newton
/// iteration in Q[T]/(chi). Cross-check oracle for jordan_decompose.
std::pair<Polynomial, Polynomial> jordan_polynomials(const Polynomial& chi);

struct FlagResult {
  bool ok = false;
  Matrix basis;  ///< columns; every input is strictly upper triangular in it
};

/// Simultaneous strict triangularization by iterated common-kernel
/// extraction. Succeeds exactly when every element of the Lie algebra
/// generated by the inputs is nilpotent; failure is a verdict, not an error.
FlagResult engel_flag(const std::vector<Matrix>& ms);

}  // namespace affcryst

#endif
