#pragma once

#include <vector>

#include "core/catalog.hpp"
#include "core/frobenius.hpp"
#include "core/lie_algebra.hpp"
#include "core/lsa.hpp"
#include "core/spectral.hpp"

namespace liefrob {

/// Basis of the derivation algebra together with the independent inner
/// derivations ad(e_i) it contains.
struct DerivationSpace {
  std::vector<Matrix> basis;
  std::vector<Matrix> innerBasis;
  int outerDim = 0;
  int dim() const { return static_cast<int>(basis.size()); }
  int innerDim() const { return static_cast<int>(innerBasis.size()); }
};

/// Whether D satisfies D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
CheckResult isDerivation(const Matrix& d, const LieAlgebra& l);

/// Solves the (#pairs * p) x p^2 linear constraint system exactly.
DerivationSpace derivationBasis(const LieAlgebra& l);

bool allDerivationsInner(const LieAlgebra& l);

/// The operator D(e_{-1}) = 0, D(e_0) = k' e_0, D(e_t) = xi'(e_t) on
/// G_{k,xi}; requires xi' conformal with factor k' and commuting with xi.
/// The derivation identity is re-verified before returning.
Matrix gkxiOuterDerivation(const GkXiSpec& spec, const Scalar& kPrime,
                           const Matrix& xiPrime, const FieldContext& ctx);

/// Runs the semisimplicity pipeline: derivation classification plus the
/// Jordan split of ad(x0). Exact field only.
struct PipelineReport {
  bool allInner = false;
  int derivationDim = 0;
  int innerDim = 0;
  int outerDim = 0;
  JordanPair jordan;
  bool nilpotentPartZero = false;
  /// allInner implies nilpotentPartZero; the converse is informational.
  bool implicationHolds = false;
};
PipelineReport principalSemisimplicityPipeline(const LieAlgebra& l,
                                               const FrobeniusStructure& f);

} // namespace liefrob
