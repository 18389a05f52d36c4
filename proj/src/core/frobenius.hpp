#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/lie_algebra.hpp"

namespace liefrob {

/// A functional alpha together with the derived data that makes the
/// algebra Frobenius: the 2-form Omega(x, y) = -<alpha, [x, y]>, the
/// isomorphism q (column i holds q(e_i) in dual coordinates, so
/// q(x) = qMatrix * x), and the principal element x0 = q^{-1}(alpha).
struct FrobeniusStructure {
  Functional alpha;
  Matrix omega;
  Matrix qMatrix;
  Vector x0;
  FieldContext field;

  FrobeniusStructure()
      : omega(0, 0, FieldKind::Exact), qMatrix(0, 0, FieldKind::Exact) {}
};

/// Matrix of the coboundary 2-form of alpha: Omega[i][j] = -<alpha, [e_i,e_j]>.
Matrix coboundaryForm(const LieAlgebra& l, const Functional& alpha);

/// Nondegeneracy of the coboundary form.
bool isFrobeniusFunctional(const LieAlgebra& l, const Functional& alpha);

/// Outcome of the deterministic search for a Frobenius functional.
/// CertifiedNone means a proof (odd dimension, or every coboundary form
/// vanishes identically); NotFound is only evidence.
struct FunctionalSearch {
  enum class Status { Found, CertifiedNone, NotFound };
  Status status = Status::NotFound;
  std::optional<Functional> found;
  std::string source; // which sweep produced the hit
  std::string note;
};

/// Sweeps dual basis vectors, then small integer combinations (budgeted),
/// then 200 seeded random rational functionals.
FunctionalSearch findFrobeniusFunctional(const LieAlgebra& l,
                                         std::uint64_t seed = 0);

/// Builds the full structure; throws NotFrobenius when the form degenerates.
FrobeniusStructure principalElement(const LieAlgebra& l,
                                    const Functional& alpha);

/// q^{-1} of the closed 1-forms; every member is cross-checked to be
/// right-nil under the induced left-symmetric product.
std::vector<Vector> rightNilBasis(const LieAlgebra& l,
                                  const FrobeniusStructure& f);

/// The affine space x0 + span(right-nils) of right-units; sampled points
/// are verified to have identity right multiplication.
struct RightUnitSet {
  Vector x0;
  std::vector<Vector> nilBasis;
};
RightUnitSet rightUnitSet(const LieAlgebra& l, const FrobeniusStructure& f);

/// The unique lambda with omega([v,x],y) + omega(x,[v,y]) = lambda*omega(x,y)
/// over all basis pairs, when consistent.
std::optional<Scalar> conformalFactor(const LieAlgebra& l,
                                      const FrobeniusStructure& f,
                                      const Vector& v);

/// trace(ad_{x0}) = -dim/2 and x0 outside the derived ideal.
struct TraceIdentityResult {
  Scalar trace;
  Scalar expected;
  bool traceMatches = false;
  bool outsideDerivedIdeal = false;
  bool ok() const { return traceMatches && outsideDerivedIdeal; }
};
TraceIdentityResult traceIdentityCheck(const LieAlgebra& l,
                                       const FrobeniusStructure& f);

/// r = qMatrix^{-1}, the Yang-Baxter tensor on the dual; skew-symmetry is
/// verified before returning.
Matrix rTensor(const FrobeniusStructure& f);

} // namespace liefrob
