#include "core/frobenius.hpp"

#include <random>

#include "core/lsa.hpp"

namespace liefrob {

Matrix coboundaryForm(const LieAlgebra& l, const Functional& alpha) {
  if (alpha.dim() != l.dim())
    throwError(ErrorCode::Argument, "functional dimension mismatch");
  requireValid(l);
  int p = l.dim();
  Matrix omega(p, p, l.kind());
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      Scalar v = -alpha.apply(l.bracketBasis(i, j));
      omega.at(i, j) = v;
      omega.at(j, i) = -v;
    }
  return omega;
}

bool isFrobeniusFunctional(const LieAlgebra& l, const Functional& alpha) {
  if (l.dim() % 2 != 0) return false;
  Matrix omega = coboundaryForm(l, alpha);
  if (l.kind() == FieldKind::Exact)
    return !determinant(omega, l.field()).isZero();
  return rank(omega, l.field()) == l.dim();
}

FunctionalSearch findFrobeniusFunctional(const LieAlgebra& l,
                                         std::uint64_t seed) {
  requireValid(l);
  FunctionalSearch result;
  int p = l.dim();
  if (p % 2 != 0) {
    result.status = FunctionalSearch::Status::CertifiedNone;
    result.note = "odd dimension: every skew form is degenerate";
    return result;
  }
  if (p == 0) {
    result.status = FunctionalSearch::Status::CertifiedNone;
    result.note = "zero-dimensional algebra";
    return result;
  }

  // Dual basis sweep. If every coboundary vanishes on a spanning set of
  // functionals, it vanishes for all of them (the algebra is abelian).
  bool anyNonzeroForm = false;
  for (int i = 0; i < p; ++i) {
    Functional alpha = Functional::dualBasis(p, i, l.kind());
    Matrix omega = coboundaryForm(l, alpha);
    if (!omega.isZero()) anyNonzeroForm = true;
    if (isFrobeniusFunctional(l, alpha)) {
      result.status = FunctionalSearch::Status::Found;
      result.found = alpha;
      result.source = "dual_basis_sweep";
      return result;
    }
  }
  if (!anyNonzeroForm) {
    result.status = FunctionalSearch::Status::CertifiedNone;
    result.note = "abelian algebra: every coboundary form is zero";
    return result;
  }

  // Small integer combinations, digit values ordered 0, 1, -1, 2, -2 so
  // sparse candidates come first; capped by a fixed budget.
  const long digitValues[5] = {0, 1, -1, 2, -2};
  const long budget = 20000;
  std::vector<int> odo(static_cast<size_t>(p), 0);
  long tried = 0;
  while (tried < budget) {
    // advance odometer (least significant coordinate first)
    int pos = p - 1;
    while (pos >= 0) {
      if (++odo[static_cast<size_t>(pos)] < 5) break;
      odo[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break; // exhausted the whole cube
    ++tried;
    Functional alpha = Functional::zero(p, l.kind());
    int support = 0;
    for (int i = 0; i < p; ++i) {
      long v = digitValues[odo[static_cast<size_t>(i)]];
      if (v != 0) ++support;
      alpha[i] = scalarFromInt(v, l.kind());
    }
    if (support <= 1) continue; // singles were covered by the dual sweep
    if (isFrobeniusFunctional(l, alpha)) {
      result.status = FunctionalSearch::Status::Found;
      result.found = alpha;
      result.source = "integer_sweep";
      return result;
    }
  }

  // Seeded random rationals, numerators in [-20, 20], denominators in [1, 20].
  std::mt19937_64 rng(seed);
  auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  for (int trial = 0; trial < 200; ++trial) {
    Functional alpha = Functional::zero(p, l.kind());
    for (int i = 0; i < p; ++i) {
      long num = draw(-20, 20);
      long den = draw(1, 20);
      alpha[i] = l.kind() == FieldKind::Exact
                     ? Scalar::rational(num, den)
                     : Scalar::complex(static_cast<double>(num) /
                                       static_cast<double>(den));
    }
    if (isFrobeniusFunctional(l, alpha)) {
      result.status = FunctionalSearch::Status::Found;
      result.found = alpha;
      result.source = "seeded_random";
      return result;
    }
  }

  result.status = FunctionalSearch::Status::NotFound;
  result.note = "search exhausted; absence of a Frobenius functional is not certified";
  return result;
}

FrobeniusStructure principalElement(const LieAlgebra& l,
                                    const Functional& alpha) {
  requireValid(l);
  FrobeniusStructure f;
  f.alpha = alpha;
  f.field = l.field();
  f.omega = coboundaryForm(l, alpha);
  f.qMatrix = f.omega.transpose();
  auto x0 = solveLinear(f.qMatrix, alpha.coords, l.field());
  if (!x0 || (l.kind() == FieldKind::Exact &&
              determinant(f.omega, l.field()).isZero()) ||
      (l.kind() == FieldKind::Approx && rank(f.omega, l.field()) < l.dim()))
    throwError(ErrorCode::NotFrobenius,
               "degenerate coboundary form: functional is not Frobenius");
  f.x0 = Vector(std::move(*x0));
  return f;
}

std::vector<Vector> rightNilBasis(const LieAlgebra& l,
                                  const FrobeniusStructure& f) {
  std::vector<Vector> nils;
  LsaProduct lsa = lsaFromFrobenius(l, f);
  for (const auto& beta : closedOneFormsBasis(l)) {
    auto v = solveLinear(f.qMatrix, beta.coords, l.field());
    if (!v)
      throwError(ErrorCode::Internal, "q-map failed to invert a closed form");
    Vector nil(std::move(*v));
    if (!isRightNil(lsa, nil, l.field()))
      throwError(ErrorCode::Internal,
                 "closed form preimage is not right-nil; q convention broken");
    nils.push_back(std::move(nil));
  }
  return nils;
}

RightUnitSet rightUnitSet(const LieAlgebra& l, const FrobeniusStructure& f) {
  RightUnitSet set{f.x0, rightNilBasis(l, f)};
  LsaProduct lsa = lsaFromFrobenius(l, f);
  // Sample the affine space: x0 itself and x0 + each basis direction.
  if (!isRightUnit(lsa, set.x0, l.field()))
    throwError(ErrorCode::Internal, "principal element is not a right-unit");
  for (const auto& nil : set.nilBasis)
    if (!isRightUnit(lsa, set.x0 + nil, l.field()))
      throwError(ErrorCode::Internal,
                 "x0 + right-nil failed the right-unit check");
  return set;
}

std::optional<Scalar> conformalFactor(const LieAlgebra& l,
                                      const FrobeniusStructure& f,
                                      const Vector& v) {
  int p = l.dim();
  if (v.dim() != p)
    throwError(ErrorCode::Argument, "conformal factor: vector dimension mismatch");
  // One unknown lambda, one equation per basis pair (i, j).
  std::vector<Scalar> lhs, rhs;
  for (int i = 0; i < p; ++i) {
    Vector vei = l.bracket(v, Vector::basis(p, i, l.kind()));
    for (int j = i + 1; j < p; ++j) {
      Vector vej = l.bracket(v, Vector::basis(p, j, l.kind()));
      Scalar a = Scalar::zero(l.kind());
      for (int m = 0; m < p; ++m) {
        if (!vei[m].isZero()) a += vei[m] * f.omega.at(m, j);
        if (!vej[m].isZero()) a += f.omega.at(i, m) * vej[m];
      }
      lhs.push_back(a);
      rhs.push_back(f.omega.at(i, j));
    }
  }
  Matrix sys(static_cast<int>(rhs.size()), 1, l.kind());
  for (size_t r = 0; r < rhs.size(); ++r) sys.at(static_cast<int>(r), 0) = rhs[r];
  auto sol = solveLinear(sys, lhs, l.field());
  if (!sol) return std::nullopt;
  return sol->front();
}

TraceIdentityResult traceIdentityCheck(const LieAlgebra& l,
                                       const FrobeniusStructure& f) {
  TraceIdentityResult r;
  r.trace = l.ad(f.x0).trace();
  r.expected = -scalarFromInt(l.dim() / 2, l.kind());
  r.traceMatches = l.field().equalWithin(r.trace, r.expected,
                                         1.0 + r.expected.approxAbs());
  r.outsideDerivedIdeal = !inSpan(derivedIdealBasis(l), f.x0, l.field());
  return r;
}

Matrix rTensor(const FrobeniusStructure& f) {
  auto inv = inverse(f.qMatrix, f.field);
  if (!inv)
    throwError(ErrorCode::NotFrobenius, "q map is not invertible");
  Matrix r = *inv;
  Matrix sym = r + r.transpose();
  double scale = r.maxAbs();
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (!f.field.negligible(sym.at(i, j), scale))
        throwError(ErrorCode::Internal, "r tensor is not skew-symmetric");
  return r;
}

} // namespace liefrob
