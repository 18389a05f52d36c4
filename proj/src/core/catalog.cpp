#include "core/catalog.hpp"

namespace liefrob {

namespace {

// Canonical symplectic matrix J of sum e*_{n+i} ^ e*_i: J(i, n+j) = -delta_ij.
Matrix canonicalSymplectic(int n, FieldKind kind) {
  Matrix j(2 * n, 2 * n, kind);
  for (int i = 0; i < n; ++i) {
    j.at(i, n + i) = -Scalar::one(kind);
    j.at(n + i, i) = Scalar::one(kind);
  }
  return j;
}

} // namespace

bool cspCheck(const Matrix& m, const Scalar& k, int n, const FieldContext& ctx) {
  if (m.rows() != 2 * n || m.cols() != 2 * n)
    throwError(ErrorCode::Argument, "csp check needs a 2n x 2n matrix");
  Matrix j = canonicalSymplectic(n, m.kind());
  Matrix lhs = m.transpose() * j + j * m;
  Matrix rhs = j.scaled(k);
  double scale = std::max(1.0, m.maxAbs() * (1.0 + k.approxAbs()));
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c)
      if (!ctx.negligible(lhs.at(r, c) - rhs.at(r, c), scale)) return false;
  return true;
}

GkXiSpec makeGkXiSpec(int n, const Scalar& k, const Matrix& m,
                      const FieldContext& ctx) {
  if (n < 1) throwError(ErrorCode::Argument, "GkXi spec needs n >= 1");
  if (ctx.negligible(k))
    throwError(ErrorCode::Argument, "csp violation: k must be nonzero");
  if (m.rows() != 2 * n || m.cols() != 2 * n)
    throwError(ErrorCode::Argument, "GkXi spec needs a 2n x 2n matrix");
  if (!cspCheck(m, k, n, ctx))
    throwError(ErrorCode::Argument,
               "csp violation: xi is not conformal with factor k for the "
               "canonical symplectic form");
  GkXiSpec spec;
  spec.n = n;
  spec.k = k;
  spec.m = m;
  return spec;
}

LieAlgebra affineAlgebra(int n, const FieldContext& ctx) {
  if (n < 1) throwError(ErrorCode::Argument, "aff(n) needs n >= 1");
  int dim = n * n + n;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      labels.push_back("E" + std::to_string(i) + std::to_string(j));
  for (int k = 1; k <= n; ++k) labels.push_back("f" + std::to_string(k));
  LieAlgebra l(dim, std::move(labels), ctx);

  auto eIdx = [n](int i, int j) { return i * n + j; };          // E_{i+1,j+1}
  auto fIdx = [n](int k) { return n * n + k; };                 // f_{k+1}
  Scalar one = Scalar::one(ctx.kind);

  // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int lcol = 0; lcol < n; ++lcol) {
          int a = eIdx(i, j), b = eIdx(k, lcol);
          if (a >= b) continue;
          if (j == k) l.addBracketTerm(a, b, eIdx(i, lcol), one);
          if (lcol == i) l.addBracketTerm(a, b, eIdx(k, j), -one);
        }
  // [E_ij, f_k] = delta_jk f_i
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (j == k) l.addBracketTerm(eIdx(i, j), fIdx(k), fIdx(i), one);
  return l;
}

LieAlgebra glSemidirect(int n, int p, const FieldContext& ctx) {
  if (n < 1 || p < 1)
    throwError(ErrorCode::Argument, "gl semidirect product needs n, p >= 1");
  if (n % p != 0)
    throwError(ErrorCode::Argument,
               "gl semidirect product requires p to divide n");
  int dim = n * n + n * p;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      labels.push_back("E" + std::to_string(i) + std::to_string(j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= p; ++j)
      labels.push_back("F" + std::to_string(i) + std::to_string(j));
  LieAlgebra l(dim, std::move(labels), ctx);

  auto eIdx = [n](int i, int j) { return i * n + j; };
  auto fIdx = [n, p](int i, int j) { return n * n + i * p + j; };
  Scalar one = Scalar::one(ctx.kind);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int lcol = 0; lcol < n; ++lcol) {
          int a = eIdx(i, j), b = eIdx(k, lcol);
          if (a >= b) continue;
          if (j == k) l.addBracketTerm(a, b, eIdx(i, lcol), one);
          if (lcol == i) l.addBracketTerm(a, b, eIdx(k, j), -one);
        }
  // [E_ij, F_kl] = delta_jk F_il (left multiplication on n x p matrices)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int lcol = 0; lcol < p; ++lcol)
          if (j == k)
            l.addBracketTerm(eIdx(i, j), fIdx(k, lcol), fIdx(i, lcol), one);
  return l;
}

LieAlgebra gKXi(const GkXiSpec& spec, const FieldContext& ctx) {
  int n = spec.n;
  int dim = 2 * n + 2;
  std::vector<std::string> labels{"e-1", "e0"};
  for (int t = 1; t <= 2 * n; ++t) labels.push_back("e" + std::to_string(t));
  LieAlgebra l(dim, std::move(labels), ctx);

  // basis order: index 0 = e_{-1}, 1 = e_0, 1+t = e_t
  l.addBracketTerm(0, 1, 1, spec.k); // [e_{-1}, e_0] = k e_0
  for (int t = 1; t <= 2 * n; ++t)
    for (int s = 1; s <= 2 * n; ++s) {
      const Scalar& c = spec.m.at(s - 1, t - 1);
      if (!c.isZero()) l.addBracketTerm(0, 1 + t, 1 + s, c); // [e_{-1}, e_t]
    }
  for (int i = 1; i <= n; ++i)
    l.addBracketTerm(1 + i, 1 + n + i, 1, Scalar::one(ctx.kind));
  return l;
}

LieAlgebra goldenInstance(int n) {
  if (n < 2) throwError(ErrorCode::Argument, "golden instance needs n >= 2");
  FieldContext ctx = FieldContext::exact();
  Matrix m(2 * n, 2 * n, ctx.kind);
  // Per block: M[i][i] = 2, M[n+i][n+i] = -1, M[n+i][i] = 1, M[i][n+i] = -1,
  // satisfying k_i (1 - k_i) + k_i'^2 = -1 with (k_i, k_i') = (2, 1).
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = Scalar::rational(2);
    m.at(n + i, n + i) = Scalar::rational(-1);
    m.at(n + i, i) = Scalar::rational(1);
    m.at(i, n + i) = Scalar::rational(-1);
  }
  return gKXi(makeGkXiSpec(n, Scalar::rational(1), m, ctx), ctx);
}

LieAlgebra diagonalInstance(int n, const std::vector<Scalar>& rates,
                            const FieldContext& ctx) {
  if (static_cast<int>(rates.size()) != n)
    throwError(ErrorCode::Argument, "diagonal instance needs exactly n rates");
  Scalar one = Scalar::one(ctx.kind);
  Matrix m(2 * n, 2 * n, ctx.kind);
  for (int i = 0; i < n; ++i) {
    if (rates[static_cast<size_t>(i)].kind() != ctx.kind)
      throwError(ErrorCode::Argument, "rate scalar kind mismatch");
    m.at(i, i) = rates[static_cast<size_t>(i)];
    m.at(n + i, n + i) = one - rates[static_cast<size_t>(i)];
  }
  return gKXi(makeGkXiSpec(n, one, m, ctx), ctx);
}

Preset examplePreset(const std::string& name) {
  return examplePreset(name, Scalar::rational(1));
}

Preset examplePreset(const std::string& name, const Scalar& ktilde) {
  FieldContext ctx = FieldContext::exact();
  if (name == "aff1") {
    LieAlgebra l(2, {"e1", "e2"}, ctx);
    l.addBracketTerm(0, 1, 1, Scalar::rational(1)); // [e1, e2] = e2
    return {std::move(l), Functional::dualBasis(2, 1, ctx.kind)};
  }
  if (name == "g7a") {
    Matrix m = Matrix::fromInts({{0, 0}, {0, 1}});
    LieAlgebra l = gKXi(makeGkXiSpec(1, Scalar::rational(1), m, ctx), ctx);
    return {std::move(l), Functional::dualBasis(4, 1, ctx.kind)};
  }
  if (name == "g7b") {
    Matrix m = Matrix::fromInts({{-1, -1}, {0, -1}});
    LieAlgebra l = gKXi(makeGkXiSpec(1, Scalar::rational(-2), m, ctx), ctx);
    return {std::move(l), Functional::dualBasis(4, 1, ctx.kind)};
  }
  if (name == "g7c") {
    if (ktilde.kind() != FieldKind::Exact || ktilde.isZero())
      throwError(ErrorCode::Argument, "g7c needs a nonzero rational parameter");
    // xi(e_1) = kt e_1 - e_2, xi(e_2) = e_1 + kt e_2, k = 2 kt.
    Matrix m(2, 2, ctx.kind);
    m.at(0, 0) = ktilde;
    m.at(1, 0) = Scalar::rational(-1);
    m.at(0, 1) = Scalar::rational(1);
    m.at(1, 1) = ktilde;
    Scalar k = Scalar::rational(2) * ktilde;
    LieAlgebra l = gKXi(makeGkXiSpec(1, k, m, ctx), ctx);
    return {std::move(l), Functional::dualBasis(4, 1, ctx.kind)};
  }
  throwError(ErrorCode::Argument, "unknown preset '" + name +
                                      "' (expected aff1, g7a, g7b or g7c)");
}

std::vector<std::string> presetNames() { return {"aff1", "g7a", "g7b", "g7c"}; }

} // namespace liefrob
