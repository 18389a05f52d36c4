#include "core/derivations.hpp"

#include <sstream>

namespace liefrob {

CheckResult isDerivation(const Matrix& d, const LieAlgebra& l) {
  int p = l.dim();
  if (d.rows() != p || d.cols() != p)
    throwError(ErrorCode::Argument, "derivation candidate has wrong shape");
  double scale = std::max(1.0, d.maxAbs());
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      Vector di = Vector(d.col(i)), dj = Vector(d.col(j));
      Vector lhs = Vector(matVec(d, l.bracketBasis(i, j).coords));
      Vector rhs = l.bracket(di, Vector::basis(p, j, l.kind())) +
                   l.bracket(Vector::basis(p, i, l.kind()), dj);
      Vector diff = lhs - rhs;
      for (int m = 0; m < p; ++m)
        if (!l.field().negligible(diff[m], scale)) {
          std::ostringstream os;
          os << "derivation identity fails on pair ("
             << l.basisLabels()[static_cast<size_t>(i)] << ", "
             << l.basisLabels()[static_cast<size_t>(j)] << ")";
          return {false, os.str()};
        }
    }
  return {};
}

DerivationSpace derivationBasis(const LieAlgebra& l) {
  requireValid(l);
  int p = l.dim();
  DerivationSpace space;
  if (p == 0) return space;

  // Unknowns D[a][b] indexed a*p + b (column b = image of e_b).
  // Equation per (i < j, component m):
  //   sum_k c^k_ij D[m][k] - sum_a D[a][i] c^m_aj - sum_b D[b][j] c^m_ib = 0
  int pairs = p * (p - 1) / 2;
  Matrix sys(pairs * p, p * p, l.kind());
  int row = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      Vector cij = l.bracketBasis(i, j);
      for (int m = 0; m < p; ++m, ++row) {
        for (int k = 0; k < p; ++k)
          if (!cij[k].isZero()) sys.at(row, m * p + k) += cij[k];
        for (int a = 0; a < p; ++a) {
          Scalar caj = l.bracketBasis(a, j)[m];
          if (!caj.isZero()) sys.at(row, a * p + i) -= caj;
          Scalar cib = l.bracketBasis(i, a)[m];
          if (!cib.isZero()) sys.at(row, a * p + j) -= cib;
        }
      }
    }

  for (auto& v : kernelBasis(sys, l.field())) {
    Matrix d(p, p, l.kind());
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) d.at(a, b) = v[static_cast<size_t>(a) * p + b];
    space.basis.push_back(std::move(d));
  }

  // Independent subset of the ad(e_i), greedily in basis order.
  std::vector<Vector> flat;
  for (int i = 0; i < p; ++i) {
    Matrix adi = l.adBasis(i);
    std::vector<Scalar> v;
    v.reserve(static_cast<size_t>(p) * p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) v.push_back(adi.at(a, b));
    Vector cand(std::move(v));
    if (cand.isZero()) continue;
    if (!inSpan(flat, cand, l.field())) {
      flat.push_back(cand);
      space.innerBasis.push_back(std::move(adi));
    }
  }
  space.outerDim = space.dim() - space.innerDim();
  return space;
}

bool allDerivationsInner(const LieAlgebra& l) {
  return derivationBasis(l).outerDim == 0;
}

Matrix gkxiOuterDerivation(const GkXiSpec& spec, const Scalar& kPrime,
                           const Matrix& xiPrime, const FieldContext& ctx) {
  int n = spec.n;
  if (xiPrime.rows() != 2 * n || xiPrime.cols() != 2 * n)
    throwError(ErrorCode::Argument, "xi' has the wrong shape");
  if (!cspCheck(xiPrime, kPrime, n, ctx))
    throwError(ErrorCode::Argument,
               "csp violation: xi' is not conformal with factor k'");
  Matrix commutator = xiPrime * spec.m - spec.m * xiPrime;
  double scale = std::max(1.0, xiPrime.maxAbs() * spec.m.maxAbs());
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c)
      if (!ctx.negligible(commutator.at(r, c), scale))
        throwError(ErrorCode::Argument, "xi' does not commute with xi");

  int dim = 2 * n + 2;
  Matrix d(dim, dim, ctx.kind);
  d.at(1, 1) = kPrime;
  for (int s = 0; s < 2 * n; ++s)
    for (int t = 0; t < 2 * n; ++t) d.at(2 + s, 2 + t) = xiPrime.at(s, t);

  LieAlgebra g = gKXi(spec, ctx);
  CheckResult check = isDerivation(d, g);
  if (!check.ok)
    throwError(ErrorCode::Internal,
               "constructed operator is not a derivation: " + check.detail);
  return d;
}

PipelineReport principalSemisimplicityPipeline(const LieAlgebra& l,
                                               const FrobeniusStructure& f) {
  if (l.kind() != FieldKind::Exact)
    throwError(ErrorCode::Unsupported,
               "the semisimplicity pipeline requires the exact field");
  PipelineReport report;
  DerivationSpace space = derivationBasis(l);
  report.derivationDim = space.dim();
  report.innerDim = space.innerDim();
  report.outerDim = space.outerDim;
  report.allInner = space.outerDim == 0;
  report.jordan = jordanChevalley(l.ad(f.x0));
  report.nilpotentPartZero = report.jordan.n.isZero();
  report.implicationHolds = !report.allInner || report.nilpotentPartZero;
  return report;
}

} // namespace liefrob
