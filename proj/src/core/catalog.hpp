#pragma once

#include <string>
#include <vector>

#include "core/lie_algebra.hpp"

namespace liefrob {

/// Parameters of the solvable family G_{k,xi} on basis
/// (e_{-1}, e_0, e_1, ..., e_{2n}): a nonzero scalar k and the matrix m of
/// a conformal map xi of the standard symplectic 2n-space with factor k.
/// makeGkXiSpec enforces the coefficient conditions; violations throw
/// Argument ("csp violation").
struct GkXiSpec {
  int n = 0;
  Scalar k;
  Matrix m;
  GkXiSpec() : m(0, 0, FieldKind::Exact) {}
};
GkXiSpec makeGkXiSpec(int n, const Scalar& k, const Matrix& m,
                      const FieldContext& ctx);

/// Conformality of m against the canonical form sum e*_{n+i} ^ e*_i:
/// m^T J + J m = k J with J the canonical symplectic matrix.
bool cspCheck(const Matrix& m, const Scalar& k, int n, const FieldContext& ctx);

/// aff(n): gl(n) acting on K^n, basis E11, E12, ..., Enn, f1, ..., fn.
LieAlgebra affineAlgebra(int n, const FieldContext& ctx = FieldContext::exact());

/// gl(n) acting on n x p matrices by left multiplication; p must divide n.
LieAlgebra glSemidirect(int n, int p,
                        const FieldContext& ctx = FieldContext::exact());

/// The (2n+2)-dimensional algebra of a validated GkXiSpec, with brackets
/// [e_i, e_{n+j}] = delta_ij e_0, [e_{-1}, e_0] = k e_0,
/// [e_{-1}, e_t] = sum_s m[s][t] e_s.
LieAlgebra gKXi(const GkXiSpec& spec, const FieldContext& ctx);

/// G_{1,xi} whose xi-blocks all have characteristic polynomial T^2 - T - 1;
/// block data (k_i, k_i') = (2, 1). Requires n >= 2.
LieAlgebra goldenInstance(int n);

/// G_{1,xi} with m = diag(rates, 1 - rates); rates supplies n scalars.
LieAlgebra diagonalInstance(int n, const std::vector<Scalar>& rates,
                            const FieldContext& ctx = FieldContext::exact());

/// A named worked example plus its canonical Frobenius functional.
struct Preset {
  LieAlgebra algebra;
  Functional alpha;
};
/// Names: aff1, g7a, g7b, g7c. g7c takes a rational parameter (default 1).
Preset examplePreset(const std::string& name);
Preset examplePreset(const std::string& name, const Scalar& ktilde);
std::vector<std::string> presetNames();

} // namespace liefrob
