#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "core/matrix.hpp"
#include "core/polynomial.hpp"

namespace liefrob {

/// Row echelon reduction. Over the exact field the pivot is the first
/// nonzero entry of the column; over the approximate field the entry of
/// largest magnitude, with a column declared pivot-free when its remaining
/// magnitude is at most tolerance * max(1, initial column magnitude).
struct RrefResult {
  Matrix reduced;
  std::vector<int> pivotCols;
  int rank = 0;
};
RrefResult rref(const Matrix& a, const FieldContext& ctx);

/// One solution of A x = b, or nullopt when inconsistent. Free variables
/// are set to zero. Over Approx, consistency means residual
/// max-norm <= tolerance * (1 + max|b|).
std::optional<std::vector<Scalar>> solveLinear(const Matrix& a,
                                               const std::vector<Scalar>& b,
                                               const FieldContext& ctx);

/// Basis of the null space in pivot order: one vector per free column,
/// carrying 1 in its free coordinate.
std::vector<std::vector<Scalar>> kernelBasis(const Matrix& a,
                                             const FieldContext& ctx);

int rank(const Matrix& a, const FieldContext& ctx);
Scalar determinant(const Matrix& a, const FieldContext& ctx);
std::optional<Matrix> inverse(const Matrix& a, const FieldContext& ctx);

/// Monic characteristic polynomial det(T*I - A) by the Faddeev-LeVerrier
/// recurrence (division by integers only, exact over rationals).
Polynomial charPoly(const Matrix& a);

/// Monic minimal polynomial: first linear dependency among I, A, A^2, ...
/// Exact field only.
Polynomial minPoly(const Matrix& a);

/// p / gcd(p, p') made monic; same roots, each once. Exact, p != 0.
Polynomial squarefreePart(const Polynomial& p);

/// All rational roots with multiplicities (ascending) plus the monic
/// rational-root-free cofactor. Exact field only.
struct ExactRoots {
  std::vector<std::pair<Scalar, int>> roots;
  Polynomial cofactor;
};
ExactRoots rootsExact(const Polynomial& p);

/// All complex roots with multiplicity by Durand-Kerner simultaneous
/// iteration; deterministic (0.4+0.9i)^j starting points, update tolerance
/// 1e-12, at most 1000 sweeps. Roots ordered by (re, im).
std::vector<std::complex<double>> rootsNumeric(const Polynomial& p);

/// For an invertible skew-symmetric 2n x 2n form, an invertible P with
/// (P^T * omega * P)(i, n+j) = delta_ij and all other block pairings zero.
Matrix darbouxBasis(const Matrix& omega, const FieldContext& ctx);

} // namespace liefrob
