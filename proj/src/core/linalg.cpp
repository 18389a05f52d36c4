#include "core/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace liefrob {

namespace {

// Shared elimination kernel: reduces in place, returns pivot columns.
// Column scales are taken from the input matrix so the Approx zero test
// stays relative to the data, not to partially eliminated values.
std::vector<int> eliminate(Matrix& m, const FieldContext& ctx,
                           bool fullReduce) {
  int rows = m.rows(), cols = m.cols();
  std::vector<double> colScale(cols, 1.0);
  if (ctx.kind == FieldKind::Approx) {
    for (int j = 0; j < cols; ++j) {
      double s = 0;
      for (int i = 0; i < rows; ++i) s = std::max(s, m.at(i, j).approxAbs());
      colScale[j] = s;
    }
  }
  std::vector<int> pivots;
  int prow = 0;
  for (int j = 0; j < cols && prow < rows; ++j) {
    int sel = -1;
    if (ctx.kind == FieldKind::Exact) {
      for (int i = prow; i < rows; ++i)
        if (!m.at(i, j).isZero()) { sel = i; break; }
    } else {
      double best = 0;
      for (int i = prow; i < rows; ++i) {
        double v = m.at(i, j).approxAbs();
        if (v > best) { best = v; sel = i; }
      }
      if (sel >= 0 && best <= ctx.tolerance * std::max(1.0, colScale[j]))
        sel = -1;
    }
    if (sel < 0) continue;
    m.swapRows(prow, sel);
    Scalar inv = Scalar::one(m.kind()) / m.at(prow, j);
    for (int c = j; c < cols; ++c) m.at(prow, c) *= inv;
    int start = fullReduce ? 0 : prow + 1;
    for (int i = start; i < rows; ++i) {
      if (i == prow) continue;
      Scalar f = m.at(i, j);
      if (f.isZero()) continue;
      for (int c = j; c < cols; ++c) {
        if (m.at(prow, c).isZero()) continue;
        m.at(i, c) -= f * m.at(prow, c);
      }
      m.at(i, j) = Scalar::zero(m.kind());
    }
    pivots.push_back(j);
    ++prow;
  }
  return pivots;
}

} // namespace

RrefResult rref(const Matrix& a, const FieldContext& ctx) {
  Matrix m = a;
  auto pivots = eliminate(m, ctx, /*fullReduce=*/true);
  return {std::move(m), pivots, static_cast<int>(pivots.size())};
}

std::optional<std::vector<Scalar>> solveLinear(const Matrix& a,
                                               const std::vector<Scalar>& b,
                                               const FieldContext& ctx) {
  if (static_cast<int>(b.size()) != a.rows())
    throwError(ErrorCode::Argument, "solve: right-hand side length mismatch");
  for (const auto& s : b)
    if (s.kind() != a.kind())
      throwError(ErrorCode::Argument, "solve: scalar kind mismatch");
  int rows = a.rows(), cols = a.cols();
  Matrix aug(rows, cols + 1, a.kind());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, cols) = b[i];
  }
  auto res = rref(aug, ctx);
  std::vector<Scalar> x(cols, Scalar::zero(a.kind()));
  for (size_t p = 0; p < res.pivotCols.size(); ++p) {
    int pc = res.pivotCols[p];
    if (pc == cols) return std::nullopt; // pivot in the augmented column
    x[pc] = res.reduced.at(static_cast<int>(p), cols);
  }
  if (ctx.kind == FieldKind::Approx) {
    double bscale = 0;
    for (const auto& s : b) bscale = std::max(bscale, s.approxAbs());
    auto ax = matVec(a, x);
    for (int i = 0; i < rows; ++i)
      if ((ax[i] - b[i]).approxAbs() > ctx.tolerance * (1.0 + bscale))
        return std::nullopt;
  }
  return x;
}

std::vector<std::vector<Scalar>> kernelBasis(const Matrix& a,
                                             const FieldContext& ctx) {
  auto res = rref(a, ctx);
  int cols = a.cols();
  std::vector<bool> isPivot(cols, false);
  for (int p : res.pivotCols) isPivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int j = 0; j < cols; ++j) {
    if (isPivot[j]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(a.kind()));
    v[j] = Scalar::one(a.kind());
    for (size_t p = 0; p < res.pivotCols.size(); ++p)
      v[res.pivotCols[p]] = -res.reduced.at(static_cast<int>(p), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const Matrix& a, const FieldContext& ctx) {
  Matrix m = a;
  return static_cast<int>(eliminate(m, ctx, /*fullReduce=*/false).size());
}

Scalar determinant(const Matrix& a, const FieldContext& ctx) {
  if (!a.isSquare())
    throwError(ErrorCode::Argument, "determinant of non-square matrix");
  int n = a.rows();
  Matrix m = a;
  Scalar det = Scalar::one(a.kind());
  for (int j = 0; j < n; ++j) {
    int sel = -1;
    if (ctx.kind == FieldKind::Exact) {
      for (int i = j; i < n; ++i)
        if (!m.at(i, j).isZero()) { sel = i; break; }
    } else {
      double best = 0;
      for (int i = j; i < n; ++i) {
        double v = m.at(i, j).approxAbs();
        if (v > best) { best = v; sel = i; }
      }
    }
    if (sel < 0) return Scalar::zero(a.kind());
    if (sel != j) {
      m.swapRows(sel, j);
      det = -det;
    }
    Scalar pivot = m.at(j, j);
    if (pivot.isZero()) return Scalar::zero(a.kind());
    det *= pivot;
    Scalar inv = Scalar::one(a.kind()) / pivot;
    for (int i = j + 1; i < n; ++i) {
      Scalar f = m.at(i, j) * inv;
      if (f.isZero()) continue;
      for (int c = j; c < n; ++c) {
        if (m.at(j, c).isZero()) continue;
        m.at(i, c) -= f * m.at(j, c);
      }
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& a, const FieldContext& ctx) {
  if (!a.isSquare())
    throwError(ErrorCode::Argument, "inverse of non-square matrix");
  int n = a.rows();
  Matrix aug(n, 2 * n, a.kind());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Scalar::one(a.kind());
  }
  auto res = rref(aug, ctx);
  for (int i = 0; i < n; ++i)
    if (i >= res.rank || res.pivotCols[i] != i) return std::nullopt;
  Matrix inv(n, n, a.kind());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = res.reduced.at(i, n + j);
  return inv;
}

Polynomial charPoly(const Matrix& a) {
  if (!a.isSquare())
    throwError(ErrorCode::Argument, "characteristic polynomial needs a square matrix");
  int n = a.rows();
  FieldKind k = a.kind();
  std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar::zero(k));
  c[n] = Scalar::one(k);
  Matrix m(n, n, k); // M_0 = 0
  for (int step = 1; step <= n; ++step) {
    m = a * m;
    Scalar shift = c[n - step + 1];
    for (int d = 0; d < n; ++d) m.at(d, d) += shift;
    Scalar tr = (a * m).trace();
    c[n - step] = -(tr / scalarFromInt(step, k));
  }
  return Polynomial::fromCoeffs(std::move(c));
}

Polynomial minPoly(const Matrix& a) {
  if (!a.isSquare())
    throwError(ErrorCode::Argument, "minimal polynomial needs a square matrix");
  if (a.kind() != FieldKind::Exact)
    throwError(ErrorCode::Unsupported,
               "minimal polynomial is only supported over the exact field");
  int n = a.rows();
  int dim2 = n * n;
  // Columns: vec(I), vec(A), vec(A^2), ... until dependent.
  std::vector<Matrix> powers{Matrix::identity(n, a.kind())};
  for (int m = 1; m <= n; ++m) {
    powers.push_back(powers.back() * a);
    Matrix sys(dim2, m + 1, a.kind());
    for (int p = 0; p <= m; ++p)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          sys.at(i * n + j, p) = powers[static_cast<size_t>(p)].at(i, j);
    auto ker = kernelBasis(sys, FieldContext::exact());
    if (!ker.empty()) {
      // First dependency: the last power's coefficient is nonzero.
      std::vector<Scalar> coeffs = ker.front();
      return Polynomial::fromCoeffs(std::move(coeffs)).monic();
    }
  }
  throwError(ErrorCode::Internal, "matrix admits no minimal polynomial");
}

Polynomial squarefreePart(const Polynomial& p) {
  if (p.isZero())
    throwError(ErrorCode::Argument, "squarefree part of the zero polynomial");
  if (p.kind() != FieldKind::Exact)
    throwError(ErrorCode::Unsupported,
               "squarefree part is only supported over the exact field");
  if (p.degree() == 0) return Polynomial::constant(Scalar::one(p.kind()));
  Polynomial g = polyGcd(p, p.derivative());
  return p.exactDiv(g).monic();
}

namespace {

// All positive divisors of |n| by trial division; desk-scale inputs only.
std::vector<mpz_class> divisorsOf(const mpz_class& n) {
  mpz_class a = abs(n);
  if (a == 0) return {};
  if (a > mpz_class("100000000000000"))
    throwError(ErrorCode::Unsupported,
               "rational root search: coefficient too large to factor");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  std::sort(small.begin(), small.end());
  return small;
}

} // namespace

ExactRoots rootsExact(const Polynomial& p) {
  if (p.kind() != FieldKind::Exact)
    throwError(ErrorCode::Unsupported,
               "exact root extraction requires the exact field");
  ExactRoots out;
  out.cofactor = p.monic();
  if (p.isZero() || p.degree() == 0) {
    out.cofactor = Polynomial::constant(Scalar::one(FieldKind::Exact));
    return out;
  }

  Polynomial work = out.cofactor;
  // Strip roots at zero first.
  int zeroMult = 0;
  while (!work.isZero() && work.coeff(0).isZero() && work.degree() > 0) {
    work = work.exactDiv(Polynomial::variable(FieldKind::Exact));
    ++zeroMult;
  }
  if (zeroMult > 0)
    out.roots.push_back({Scalar::rational(0), zeroMult});

  if (work.degree() >= 1) {
    // Clear denominators to a primitive integer polynomial.
    mpz_class denLcm = 1;
    for (const auto& c : work.coeffs())
      denLcm = lcm(denLcm, c.rat().get_den());
    std::vector<mpz_class> ic;
    mpz_class content = 0;
    for (const auto& c : work.coeffs()) {
      mpz_class v = c.rat().get_num() * (denLcm / c.rat().get_den());
      content = gcd(content, v);
      ic.push_back(v);
    }
    if (content > 1)
      for (auto& v : ic) v /= content;

    const mpz_class a0 = ic.front(), an = ic.back();
    for (const auto& u : divisorsOf(a0)) {
      for (const auto& v : divisorsOf(an)) {
        if (gcd(u, v) != 1) continue;
        for (int sign : {1, -1}) {
          mpq_class cand(sign > 0 ? u : mpz_class(-u), v);
          cand.canonicalize();
          Scalar r = Scalar::rational(cand);
          int mult = 0;
          Polynomial lin = Polynomial::fromCoeffs({-r, Scalar::rational(1)});
          while (work.degree() >= 1 && work.eval(r).isZero()) {
            work = work.exactDiv(lin);
            ++mult;
          }
          if (mult > 0) out.roots.push_back({r, mult});
        }
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) {
              return Scalar::lexLess(a.first, b.first);
            });
  out.cofactor = work.monic();
  return out;
}

std::vector<std::complex<double>> rootsNumeric(const Polynomial& p) {
  if (p.degree() < 1)
    throwError(ErrorCode::Argument, "numeric roots require degree >= 1");
  int n = p.degree();
  std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[i] = p.coeff(i).toComplex();
  for (int i = 0; i <= n; ++i) c[i] /= c[n];

  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + c[i];
    return acc;
  };

  const std::complex<double> seed(0.4, 0.9);
  std::vector<std::complex<double>> z(n);
  std::complex<double> w = 1.0;
  for (int i = 0; i < n; ++i) {
    w *= seed;
    z[i] = w;
  }

  const double tol = 1e-12;
  const int maxSweeps = 1000;
  bool converged = false;
  for (int sweep = 0; sweep < maxSweeps && !converged; ++sweep) {
    double maxStep = 0, maxMod = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == std::complex<double>(0.0, 0.0)) {
        // Collided iterates: nudge deterministically and continue.
        z[i] += std::complex<double>(1e-8, 1e-8) * static_cast<double>(i + 1);
        maxStep = 1.0;
        continue;
      }
      std::complex<double> step = eval(z[i]) / denom;
      z[i] -= step;
      maxStep = std::max(maxStep, std::abs(step));
      maxMod = std::max(maxMod, std::abs(z[i]));
    }
    converged = maxStep <= tol * (1.0 + maxMod);
  }
  if (!converged)
    throwError(ErrorCode::Internal,
               "Durand-Kerner iteration did not converge within 1000 sweeps");
  std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

Matrix darbouxBasis(const Matrix& omega, const FieldContext& ctx) {
  if (!omega.isSquare())
    throwError(ErrorCode::Argument, "Darboux basis needs a square form");
  int dim = omega.rows();
  if (dim % 2 != 0)
    throwError(ErrorCode::Argument, "Darboux basis needs even dimension");
  double scale = omega.maxAbs();
  Matrix skewCheck = omega + omega.transpose();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!ctx.negligible(skewCheck.at(i, j), scale))
        throwError(ErrorCode::Argument, "Darboux basis needs a skew form");

  auto pairing = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    Scalar s = Scalar::zero(omega.kind());
    for (int i = 0; i < dim; ++i) {
      if (x[i].isZero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (omega.at(i, j).isZero() || y[j].isZero()) continue;
        s += x[i] * omega.at(i, j) * y[j];
      }
    }
    return s;
  };

  std::vector<std::vector<Scalar>> pool;
  for (int i = 0; i < dim; ++i) {
    std::vector<Scalar> e(dim, Scalar::zero(omega.kind()));
    e[i] = Scalar::one(omega.kind());
    pool.push_back(std::move(e));
  }

  std::vector<std::vector<Scalar>> us, vs;
  while (!pool.empty()) {
    std::vector<Scalar> u = pool.front();
    pool.erase(pool.begin());
    int mate = -1;
    Scalar best = Scalar::zero(omega.kind());
    for (size_t t = 0; t < pool.size(); ++t) {
      Scalar s = pairing(u, pool[t]);
      if (!ctx.negligible(s, std::max(1.0, scale))) { mate = static_cast<int>(t); best = s; break; }
    }
    if (mate < 0)
      throwError(ErrorCode::Argument, "Darboux basis needs a nondegenerate form");
    std::vector<Scalar> v = pool[static_cast<size_t>(mate)];
    pool.erase(pool.begin() + mate);
    Scalar inv = Scalar::one(omega.kind()) / best;
    for (auto& s : v) s *= inv; // now pairing(u, v) = 1
    for (auto& w : pool) {
      Scalar a = pairing(w, v), b = pairing(w, u);
      // w' = w - a*u + b*v kills both pairings.
      for (int i = 0; i < dim; ++i) w[i] = w[i] - a * u[i] + b * v[i];
    }
    us.push_back(std::move(u));
    vs.push_back(std::move(v));
  }

  int half = static_cast<int>(us.size());
  Matrix p(dim, dim, omega.kind());
  for (int c = 0; c < half; ++c)
    for (int i = 0; i < dim; ++i) {
      p.at(i, c) = us[static_cast<size_t>(c)][i];
      p.at(i, half + c) = vs[static_cast<size_t>(c)][i];
    }
  return p;
}

} // namespace liefrob
