#pragma once

#include <string>
#include <vector>

#include "core/frobenius.hpp"
#include "core/lie_algebra.hpp"

namespace liefrob {

struct CheckResult {
  bool ok = true;
  std::string detail;
};

/// Multiplication tensor of a left-symmetric product: e_i * e_j =
/// sum_k a[k][i][j] e_k, stored densely. Plain data; the validators below
/// and lsaFromFrobenius establish the axioms.
struct LsaProduct {
  int dim = 0;
  FieldKind fieldKind = FieldKind::Exact;
  std::vector<Scalar> a; // [k * dim * dim + i * dim + j]

  LsaProduct() = default;
  LsaProduct(int dim, FieldKind kind);

  const Scalar& coeff(int k, int i, int j) const {
    return a[static_cast<size_t>(k) * dim * dim + static_cast<size_t>(i) * dim + j];
  }
  Scalar& coeff(int k, int i, int j) {
    return a[static_cast<size_t>(k) * dim * dim + static_cast<size_t>(i) * dim + j];
  }

  Vector basisProduct(int i, int j) const;
  Vector product(const Vector& x, const Vector& y) const;
  double maxAbs() const;
};

/// Solves omega(e_i * e_j, z) = -omega(e_j, [e_i, z]) column by column
/// against the factored q matrix, then re-verifies left-symmetry and the
/// commutator identity; failure of either is a hard error.
LsaProduct lsaFromFrobenius(const LieAlgebra& l, const FrobeniusStructure& f);

/// Matrix of y -> x * y.
Matrix leftMult(const LsaProduct& p, const Vector& x);
/// Matrix of x -> x * y.
Matrix rightMult(const LsaProduct& p, const Vector& y);

bool isRightUnit(const LsaProduct& p, const Vector& y, const FieldContext& ctx);
bool isRightNil(const LsaProduct& p, const Vector& y, const FieldContext& ctx);

/// Left-symmetry as a representation property: L_{[x,y]} = [L_x, L_y]
/// on all basis pairs.
CheckResult leftRepCheck(const LsaProduct& p, const LieAlgebra& l);

/// Commutator identity x*y - y*x = [x, y] on all basis pairs.
CheckResult commutatorCheck(const LsaProduct& p, const LieAlgebra& l);

} // namespace liefrob
