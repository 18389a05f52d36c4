#pragma once

#include <complex>
#include <vector>

#include "core/linalg.hpp"

namespace liefrob {

/// Commuting semisimple + nilpotent split with s + n equal to the input;
/// every output is re-verified against all four invariants.
struct JordanPair {
  Matrix s;
  Matrix n;
  JordanPair() : s(0, 0, FieldKind::Exact), n(0, 0, FieldKind::Exact) {}
};

/// Squarefree minimal polynomial test; exact field only (the rationals are
/// perfect, so this is semisimplicity over any extension).
bool isSemisimple(const Matrix& a);

/// A^dim = 0, exactly or within tolerance.
bool isNilpotent(const Matrix& a, const FieldContext& ctx);

/// Newton iteration on the squarefree part f of the characteristic
/// polynomial: s <- s - f(s) h(s) with h = f'^{-1} mod f from the extended
/// gcd; starts at A, reaches f(s) = 0 in at most ceil(log2 dim) + 1 steps.
JordanPair jordanChevalley(const Matrix& a);

struct RationalEigenvalue {
  Scalar value;
  int algebraic = 0;
  int geometric = 0;
};

struct EigenReport {
  std::vector<RationalEigenvalue> rationalEigenvalues;
  Polynomial residualFactor;        // exact field: rational-root-free cofactor
  std::vector<std::pair<std::complex<double>, int>> numericEigenvalues;
  bool diagonalizableOverC = false;
  bool diagonalizableOverBase = false;
  bool numericAssisted = false;     // base-field decision used numeric roots
  bool semisimpleKnown = false;     // false over the approximate field
  bool semisimple = false;
};

/// Exact field: rational eigenvalues by root extraction, geometric
/// multiplicities by kernel ranks, residual kept unfactored; the base-field
/// (real) diagonalizability of the residual is decided numerically with a
/// 1e-9 imaginary-part tolerance. Approximate field: Durand-Kerner roots of
/// the characteristic polynomial clustered at 1e-7.
EigenReport eigenReport(const Matrix& a, const FieldContext& ctx);

} // namespace liefrob
