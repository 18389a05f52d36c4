#include "core/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace liefrob {

bool isSemisimple(const Matrix& a) {
  if (!a.isSquare())
    throwError(ErrorCode::Argument, "semisimplicity test needs a square matrix");
  if (a.kind() != FieldKind::Exact)
    throwError(ErrorCode::Unsupported,
               "semisimplicity test requires the exact field; use eigenReport");
  Polynomial m = minPoly(a);
  return polyGcd(m, m.derivative()).degree() == 0;
}

bool isNilpotent(const Matrix& a, const FieldContext& ctx) {
  if (!a.isSquare())
    throwError(ErrorCode::Argument, "nilpotency test needs a square matrix");
  if (a.rows() == 0) return true;
  Matrix power = a.pow(a.rows());
  if (ctx.kind == FieldKind::Exact) return power.isZero();
  double scale = std::pow(std::max(1.0, a.maxAbs()), a.rows());
  for (int i = 0; i < power.rows(); ++i)
    for (int j = 0; j < power.cols(); ++j)
      if (!ctx.negligible(power.at(i, j), scale)) return false;
  return true;
}

JordanPair jordanChevalley(const Matrix& a) {
  if (!a.isSquare())
    throwError(ErrorCode::Argument, "Jordan-Chevalley needs a square matrix");
  if (a.kind() != FieldKind::Exact)
    throwError(ErrorCode::Unsupported,
               "Jordan-Chevalley decomposition requires the exact field");
  int dim = a.rows();
  JordanPair out;
  if (dim == 0) {
    out.s = a;
    out.n = a;
    return out;
  }
  Polynomial f = squarefreePart(charPoly(a));
  auto ext = polyExtGcd(f, f.derivative());
  if (ext.g.degree() != 0)
    throwError(ErrorCode::Internal, "squarefree part shares roots with its derivative");
  // v * f' = 1 mod f, up to the unit normalization of the gcd.
  Polynomial h = ext.v.scaled(Scalar::rational(1) / ext.g.coeff(0));

  Matrix s = a;
  int maxIter = 1;
  while ((1 << maxIter) < dim) ++maxIter; // ceil(log2 dim)
  ++maxIter;
  bool done = false;
  for (int iter = 0; iter <= maxIter && !done; ++iter) {
    Matrix fs = f.evalMatrix(s);
    if (fs.isZero()) {
      done = true;
      break;
    }
    s = s - fs * h.evalMatrix(s);
  }
  if (!done && !f.evalMatrix(s).isZero())
    throwError(ErrorCode::Internal,
               "Jordan-Chevalley Newton iteration failed to terminate");
  out.s = s;
  out.n = a - s;

  // Re-verify all four invariants on every output.
  if (!(out.s + out.n == a))
    throwError(ErrorCode::Internal, "Jordan-Chevalley: s + n != A");
  if (!(out.s * out.n == out.n * out.s))
    throwError(ErrorCode::Internal, "Jordan-Chevalley: parts do not commute");
  if (!isSemisimple(out.s))
    throwError(ErrorCode::Internal, "Jordan-Chevalley: s is not semisimple");
  if (!isNilpotent(out.n, FieldContext::exact()))
    throwError(ErrorCode::Internal, "Jordan-Chevalley: n is not nilpotent");
  return out;
}

namespace {

EigenReport eigenReportExact(const Matrix& a, const FieldContext& ctx) {
  EigenReport report;
  int dim = a.rows();
  Polynomial cp = charPoly(a);
  auto roots = rootsExact(cp);
  for (const auto& [value, mult] : roots.roots) {
    Matrix shifted = a;
    for (int d = 0; d < dim; ++d) shifted.at(d, d) -= value;
    int geo = dim - rank(shifted, ctx);
    report.rationalEigenvalues.push_back({value, mult, geo});
  }
  report.residualFactor = roots.cofactor;

  Polynomial mp = minPoly(a);
  report.semisimpleKnown = true;
  report.semisimple = polyGcd(mp, mp.derivative()).degree() == 0;
  report.diagonalizableOverC = report.semisimple;

  report.diagonalizableOverBase = report.semisimple;
  if (report.semisimple && roots.cofactor.degree() > 0) {
    // Rational input read over the reals: the residual's roots must all be
    // real. Decided numerically on the min-poly residual (squarefree, so
    // roots are simple) with 1e-9 imaginary tolerance.
    report.numericAssisted = true;
    Polynomial mpResidual = rootsExact(mp).cofactor;
    if (mpResidual.degree() > 0) {
      auto numeric = rootsNumeric(mpResidual);
      double scale = 1.0 + mpResidual.normL1();
      // Certified separation: simple roots must be distinguishable before
      // trusting the realness of each one.
      double minSep = std::numeric_limits<double>::infinity();
      for (size_t i = 0; i < numeric.size(); ++i)
        for (size_t j = i + 1; j < numeric.size(); ++j)
          minSep = std::min(minSep, std::abs(numeric[i] - numeric[j]));
      bool separated = numeric.size() < 2 || minSep > 1e-7;
      bool allReal = separated;
      for (const auto& z : numeric)
        if (std::abs(z.imag()) > 1e-9 * scale) allReal = false;
      report.diagonalizableOverBase = allReal;
    }
  }
  return report;
}

EigenReport eigenReportApprox(const Matrix& a, const FieldContext& ctx) {
  EigenReport report;
  report.residualFactor = Polynomial::zero(FieldKind::Approx);
  int dim = a.rows();
  if (dim == 0) {
    report.diagonalizableOverC = true;
    report.diagonalizableOverBase = true;
    return report;
  }
  auto roots = rootsNumeric(charPoly(a));
  const double clusterTol = 1e-7;
  std::vector<std::pair<std::complex<double>, int>> clusters;
  for (const auto& z : roots) {
    bool merged = false;
    for (auto& [rep, count] : clusters) {
      if (std::abs(z - rep) <= clusterTol) {
        rep = (rep * static_cast<double>(count) + z) /
              static_cast<double>(count + 1);
        ++count;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back({z, 1});
  }
  report.numericEigenvalues = clusters;
  bool diag = true;
  for (const auto& [rep, count] : clusters) {
    if (count == 1) continue;
    Matrix shifted = a;
    for (int d = 0; d < dim; ++d)
      shifted.at(d, d) -= Scalar::complex(rep.real(), rep.imag());
    // Rank at the clustering scale, not the solver tolerance.
    FieldContext rankCtx = FieldContext::approx(
        std::max(ctx.tolerance, clusterTol * std::max(1.0, a.maxAbs())));
    int geo = dim - rank(shifted, rankCtx);
    if (geo < count) diag = false;
  }
  report.diagonalizableOverC = diag;
  report.diagonalizableOverBase = diag; // the approximate base field is C
  return report;
}

} // namespace

EigenReport eigenReport(const Matrix& a, const FieldContext& ctx) {
  if (!a.isSquare())
    throwError(ErrorCode::Argument, "eigen report needs a square matrix");
  return ctx.kind == FieldKind::Exact ? eigenReportExact(a, ctx)
                                      : eigenReportApprox(a, ctx);
}

} // namespace liefrob
