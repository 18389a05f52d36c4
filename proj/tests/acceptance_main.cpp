// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/derivations.hpp"
#include "core/frobenius.hpp"
#include "core/lsa.hpp"
#include "core/sl_embed.hpp"
#include "core/spectral.hpp"

using namespace liefrob;

namespace {

int g_failed = 0;

/// Collects sub-check failures for one criterion.
class Checker {
public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

private:
  std::vector<std::string> failures_;
};

void criterion(int number, const std::string& title,
               const std::function<void(Checker&)>& body) {
  Checker check;
  std::string crashed;
  try {
    body(check);
  } catch (const std::exception& e) {
    crashed = e.what();
  }
  bool pass = check.ok() && crashed.empty();
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", number,
              title.c_str());
  if (!pass) {
    ++g_failed;
    for (const auto& f : check.failures())
      std::printf("        - %s\n", f.c_str());
    if (!crashed.empty()) std::printf("        - threw: %s\n", crashed.c_str());
  }
}

Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }

struct NamedPreset {
  std::string name;
  LieAlgebra algebra;
  Functional alpha;
};

std::vector<NamedPreset> acceptancePresets() {
  std::vector<NamedPreset> out;
  for (const auto& name : presetNames()) {
    Preset p = examplePreset(name);
    out.push_back({name, std::move(p.algebra), std::move(p.alpha)});
  }
  LieAlgebra golden = goldenInstance(2);
  Functional alpha = Functional::dualBasis(golden.dim(), 1, FieldKind::Exact);
  out.push_back({"golden2", std::move(golden), std::move(alpha)});
  return out;
}

} // namespace

static void criterion1(Checker& c) {
  Preset preset = examplePreset("aff1");
  const LieAlgebra& l = preset.algebra;

  auto runOnce = [&]() {
    FrobeniusStructure f = principalElement(l, preset.alpha);
    LsaProduct p = lsaFromFrobenius(l, f);
    return std::make_pair(f, p);
  };
  runOnce(); // warm up allocators before timing

  auto start = std::chrono::steady_clock::now();
  auto [f, p] = runOnce();
  Scalar trace = l.ad(f.x0).trace();
  auto elapsed = std::chrono::steady_clock::now() - start;

  c.require(p.basisProduct(0, 0) == Vector({q(-1), q(0)}), "e1 e1 = -e1");
  c.require(p.basisProduct(0, 1).isZero(), "e1 e2 = 0");
  c.require(p.basisProduct(1, 0) == Vector({q(0), q(-1)}), "e2 e1 = -e2");
  c.require(p.basisProduct(1, 1).isZero(), "e2 e2 = 0");
  c.require(f.qMatrix.col(0) == std::vector<Scalar>{q(0), q(-1)},
            "q(e1) = -e2*");
  c.require(f.qMatrix.col(1) == std::vector<Scalar>{q(1), q(0)},
            "q(e2) = e1*");
  c.require(f.x0 == Vector({q(-1), q(0)}), "x0 = -e1");
  c.require(trace == q(-1), "trace(ad x0) = -1");
  double ms =
      std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count() /
      1e6;
  c.require(ms < 1.0, "computation under 1 ms (took " + std::to_string(ms) + " ms)");
}

static void criterion2(Checker& c) {
  Preset preset = examplePreset("g7a");
  const LieAlgebra& l = preset.algebra;
  FrobeniusStructure f = principalElement(l, preset.alpha);
  c.require(f.x0 == Vector({q(-1), q(0), q(0), q(0)}), "x0 = -e-1");
  Matrix expected = Matrix::diagonal({q(0), q(-1), q(0), q(-1)});
  c.require(l.ad(f.x0) == expected, "ad(x0) = -diag(0,1,0,1)");
  c.require(isSemisimple(l.ad(f.x0)), "ad(x0) is semisimple");
  auto nils = rightNilBasis(l, f);
  c.require(nils.size() == 2, "two right-nil directions");
  std::vector<Vector> expectedSpan{Vector({q(0), q(1), q(0), q(0)}),
                                   Vector({q(0), q(0), q(0), q(1)})};
  for (const auto& nil : nils)
    c.require(inSpan(expectedSpan, nil, l.field()),
              "right-nil basis inside span{e0, e2}");
  c.require(spanRank(nils, l.field()) == 2, "right-nil basis spans 2 dims");
}

static void criterion3(Checker& c) {
  Preset preset = examplePreset("g7b");
  const LieAlgebra& l = preset.algebra;
  FrobeniusStructure f = principalElement(l, preset.alpha);
  Matrix ad = l.ad(f.x0);
  Polynomial expected = Polynomial::fromRoots(
      {q(0), q(-1), q(-1, 2), q(-1, 2)}, FieldKind::Exact);
  c.require(charPoly(ad) == expected, "char poly = T(T+1)(T+1/2)^2");

  Matrix shifted = ad;
  for (int d = 0; d < 4; ++d) shifted.at(d, d) += q(1, 2);
  auto eigenspace = kernelBasis(shifted, l.field());
  c.require(eigenspace.size() == 1, "eigenspace of -1/2 is 1-dimensional");
  if (eigenspace.size() == 1)
    c.require(Vector(eigenspace[0]) == Vector({q(0), q(0), q(1), q(0)}),
              "eigenspace spanned by (0,0,1,0)");

  JordanPair jc = jordanChevalley(ad);
  c.require(!jc.n.isZero(), "nilpotent part is nonzero");
  c.require(jc.s + jc.n == ad, "s + n = ad(x0)");
  c.require(jc.s * jc.n == jc.n * jc.s, "s and n commute");
  c.require(isSemisimple(jc.s), "s is semisimple");
  c.require(isNilpotent(jc.n, l.field()), "n is nilpotent");
}

static void criterion4(Checker& c) {
  Preset preset = examplePreset("g7c"); // k-tilde = 1
  const LieAlgebra& l = preset.algebra;
  FrobeniusStructure f = principalElement(l, preset.alpha);
  EigenReport report = eigenReport(l.ad(f.x0), l.field());
  c.require(report.diagonalizableOverC, "diagonalizable over C");
  c.require(!report.diagonalizableOverBase, "not diagonalizable over R");
  c.require(report.residualFactor.degree() == 2,
            "residual factor is an irreducible quadratic");
  auto roots = rootsNumeric(report.residualFactor);
  int nonReal = 0;
  for (const auto& z : roots)
    if (std::abs(z.imag()) > 1e-9) ++nonReal;
  c.require(nonReal == 2, "exactly one conjugate pair of non-real roots");
  if (roots.size() == 2) {
    c.require(std::abs(roots[0] - std::complex<double>(-0.5, -0.5)) <= 1e-9,
              "root -1/2 - i/2 within 1e-9");
    c.require(std::abs(roots[1] - std::complex<double>(-0.5, 0.5)) <= 1e-9,
              "root -1/2 + i/2 within 1e-9");
    c.require(std::abs(roots[0] - std::conj(roots[1])) <= 1e-9,
              "roots are conjugate");
  }
}

static void criterion5(Checker& c) {
  LieAlgebra golden = goldenInstance(2);
  Functional alpha = Functional::dualBasis(6, 1, FieldKind::Exact);
  FrobeniusStructure f = principalElement(golden, alpha);

  Polynomial plus = Polynomial::fromCoeffs({q(-1), q(1), q(1)});  // T^2+T-1
  Polynomial minus = Polynomial::fromCoeffs({q(-1), q(-1), q(1)}); // T^2-T-1

  Polynomial cpX0 = charPoly(golden.ad(f.x0));
  auto once = cpX0.divmod(plus);
  c.require(once.remainder.isZero(), "(T^2+T-1) divides char(ad x0)");
  auto twice = once.quotient.divmod(plus);
  c.require(twice.remainder.isZero(), "(T^2+T-1)^2 divides char(ad x0)");

  Polynomial cpEm1 = charPoly(golden.adBasis(0));
  auto onceM = cpEm1.divmod(minus);
  c.require(onceM.remainder.isZero(), "(T^2-T-1) divides char(ad e-1)");
  auto twiceM = onceM.quotient.divmod(minus);
  c.require(twiceM.remainder.isZero(), "(T^2-T-1)^2 divides char(ad e-1)");
}

static void criterion6(Checker& c) {
  const double pi = 3.14159265358979323846;
  FieldContext ctx = FieldContext::approx(1e-9);
  std::vector<Scalar> rates{Scalar::complex(pi), Scalar::complex(pi * pi),
                            Scalar::complex(pi * pi * pi)};
  LieAlgebra g = diagonalInstance(3, rates, ctx);
  c.require(g.validate().valid(), "pi-power instance passes validation");
  Functional alpha = Functional::dualBasis(g.dim(), 1, FieldKind::Approx);
  FrobeniusStructure f = principalElement(g, alpha);
  EigenReport report = eigenReport(g.ad(f.x0), ctx);

  std::vector<double> eigen;
  for (const auto& [z, mult] : report.numericEigenvalues) {
    c.require(std::abs(z.imag()) <= 1e-7, "eigenvalues are real");
    for (int i = 0; i < mult; ++i) eigen.push_back(z.real());
  }
  std::vector<double> expected{0, 1, pi, pi * pi, pi * pi * pi,
                               1 - pi, 1 - pi * pi, 1 - pi * pi * pi};
  for (auto& v : expected) v = -v; // x0 = -e-1 flips the sign
  std::sort(eigen.begin(), eigen.end());
  std::sort(expected.begin(), expected.end());
  c.require(eigen.size() == expected.size(), "eight eigenvalues with multiplicity");
  if (eigen.size() == expected.size())
    for (size_t i = 0; i < eigen.size(); ++i)
      c.require(std::abs(eigen[i] - expected[i]) <= 1e-7,
                "eigenvalue " + std::to_string(expected[i]) + " within 1e-7");
}

static void criterion7(Checker& c) {
  auto start = std::chrono::steady_clock::now();
  for (int n : {1, 2, 3}) {
    DerivationSpace space = derivationBasis(affineAlgebra(n));
    c.require(space.dim() == n * n + n,
              "aff(" + std::to_string(n) + ") derivation dim = " +
                  std::to_string(n * n + n));
    c.require(space.outerDim == 0,
              "aff(" + std::to_string(n) + ") has no outer derivations");
  }
  double seconds = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count() /
                   1e3;
  c.require(seconds < 5.0,
            "derivation systems solved in under 5 s (took " +
                std::to_string(seconds) + " s)");
}

static void criterion8(Checker& c) {
  LieAlgebra aff2 = affineAlgebra(2);
  FunctionalSearch search = findFrobeniusFunctional(aff2, 0);
  c.require(search.status == FunctionalSearch::Status::Found,
            "seeded search finds a functional on aff(2)");
  if (search.found) {
    FrobeniusStructure f = principalElement(aff2, *search.found);
    PipelineReport report = principalSemisimplicityPipeline(aff2, f);
    c.require(report.allInner, "aff(2): every derivation is inner");
    c.require(report.nilpotentPartZero, "aff(2): nilpotent part is zero");
    c.require(report.implicationHolds, "aff(2): implication holds");
  }

  Preset g7b = examplePreset("g7b");
  FrobeniusStructure fb = principalElement(g7b.algebra, g7b.alpha);
  PipelineReport rb = principalSemisimplicityPipeline(g7b.algebra, fb);
  c.require(!rb.allInner, "g7b: outer derivations exist");
  c.require(!rb.nilpotentPartZero, "g7b: nilpotent part is nonzero");
  c.require(rb.implicationHolds, "g7b: hypothesis fails, no contradiction");
}

static void criterion9(Checker& c) {
  for (const auto& preset : acceptancePresets()) {
    FrobeniusStructure f = principalElement(preset.algebra, preset.alpha);
    LsaProduct p = lsaFromFrobenius(preset.algebra, f);
    SlEmbedding e = embed(preset.algebra, p);
    EmbeddingCheck check = verifyEmbedding(e, preset.algebra);
    c.require(check.traceless, preset.name + ": images traceless");
    c.require(check.homomorphism, preset.name + ": brackets preserved");
    c.require(check.injective, preset.name + ": embedding injective");
  }

  // Regression pinning the recentred block form: the corner-trace variant
  // must fail the homomorphism check on aff(1).
  Preset aff1 = examplePreset("aff1");
  FrobeniusStructure f = principalElement(aff1.algebra, aff1.alpha);
  LsaProduct p = lsaFromFrobenius(aff1.algebra, f);
  SlEmbedding literal = embedCornerTraceOnly(aff1.algebra, p);
  EmbeddingCheck check = verifyEmbedding(literal, aff1.algebra);
  c.require(!check.homomorphism,
            "corner-trace variant fails the homomorphism check on aff(1)");
}

static void criterion10(Checker& c) {
  const int kWantedFunctionals = 100;
  for (const auto& preset : acceptancePresets()) {
    const LieAlgebra& l = preset.algebra;
    int p = l.dim();
    auto derived = derivedIdealBasis(l);
    int derivedDim = static_cast<int>(derived.size());

    std::mt19937_64 rng(2024);
    std::vector<Functional> alphas{preset.alpha};
    int draws = 0;
    while (static_cast<int>(alphas.size()) < kWantedFunctionals + 1 &&
           draws < 20000) {
      ++draws;
      Functional alpha = Functional::zero(p, l.kind());
      for (int i = 0; i < p; ++i) {
        long num = static_cast<long>(rng() % 41) - 20;
        long den = 1 + static_cast<long>(rng() % 20);
        alpha[i] = Scalar::rational(num, den);
      }
      if (isFrobeniusFunctional(l, alpha)) alphas.push_back(std::move(alpha));
    }
    c.require(static_cast<int>(alphas.size()) == kWantedFunctionals + 1,
              preset.name + ": 100 random Frobenius functionals found");

    c.require(!isUnimodular(l), preset.name + ": Frobenius but not unimodular");

    bool qEquivariance = true, closedness = true, lsaAxioms = true;
    bool leftOfUnits = true, confX0 = true, confNil = true;
    bool traceHalf = true, outsideDerived = true, nilDim = true;
    for (const auto& alpha : alphas) {
      FrobeniusStructure f = principalElement(l, alpha);
      LsaProduct prod = lsaFromFrobenius(l, f); // verifies Eqs. (3)-(4)
      lsaAxioms = lsaAxioms && leftRepCheck(prod, l).ok &&
                  commutatorCheck(prod, l).ok;

      for (int i = 0; i < p && qEquivariance; ++i)
        for (int j = 0; j < p && qEquivariance; ++j) {
          auto qProd = matVec(f.qMatrix, prod.basisProduct(i, j).coords);
          Functional qj(
              matVec(f.qMatrix, Vector::basis(p, j, l.kind()).coords));
          for (int z = 0; z < p; ++z)
            if (qProd[static_cast<size_t>(z)] !=
                -qj.apply(l.bracketBasis(i, z))) {
              qEquivariance = false;
              break;
            }
        }

      for (int i = 0; i < p && closedness; ++i)
        for (int j = i + 1; j < p && closedness; ++j)
          for (int z = j + 1; z < p; ++z) {
            auto pairWith = [&](const Vector& x, int col) {
              Scalar s = Scalar::rational(0);
              for (int m = 0; m < p; ++m)
                if (!x[m].isZero()) s += x[m] * f.omega.at(m, col);
              return s;
            };
            Scalar cyclic = pairWith(l.bracketBasis(i, j), z) +
                            pairWith(l.bracketBasis(j, z), i) +
                            pairWith(l.bracketBasis(z, i), j);
            if (!cyclic.isZero()) {
              closedness = false;
              break;
            }
          }

      auto nils = rightNilBasis(l, f);
      nilDim = nilDim && static_cast<int>(nils.size()) == p - derivedDim;

      std::vector<Vector> units{f.x0};
      for (const auto& nil : nils) units.push_back(f.x0 + nil);
      for (const auto& y0 : units)
        if (!(leftMult(prod, y0) ==
              Matrix::identity(p, l.kind()) + l.ad(y0)))
          leftOfUnits = false;

      auto lambda = conformalFactor(l, f, f.x0);
      confX0 = confX0 && lambda && *lambda == q(-1);
      for (const auto& nil : nils) {
        auto mu = conformalFactor(l, f, nil);
        confNil = confNil && mu && mu->isZero();
      }

      traceHalf = traceHalf && l.ad(f.x0).trace() == q(-p, 2);
      outsideDerived = outsideDerived && !inSpan(derived, f.x0, l.field());
    }
    c.require(qEquivariance, preset.name + ": q-equivariance");
    c.require(closedness, preset.name + ": coboundary forms closed");
    c.require(lsaAxioms, preset.name + ": left-symmetry and commutator");
    c.require(leftOfUnits, preset.name + ": L_y0 = I + ad(y0) on right-units");
    c.require(confX0, preset.name + ": conformal factor of x0 is -1");
    c.require(confNil, preset.name + ": right-nils are symplectic");
    c.require(traceHalf, preset.name + ": trace(ad x0) = -dim/2");
    c.require(outsideDerived, preset.name + ": x0 outside the derived ideal");
    c.require(nilDim, preset.name + ": right-nil dim = dim - derived dim");
  }
}

int main() {
  criterion(1, "aff(1) worked example, exact, under 1 ms", criterion1);
  criterion(2, "family example (a): principal element and right-nils", criterion2);
  criterion(3, "family example (b): non-semisimple principal adjoint", criterion3);
  criterion(4, "family example (c): complex-only diagonalizability", criterion4);
  criterion(5, "golden instance n=2: squared golden factor", criterion5);
  criterion(6, "pi-power instance n=3 over complex64", criterion6);
  criterion(7, "aff(n) derivations are inner, n = 1, 2, 3", criterion7);
  criterion(8, "inner-derivation hypothesis vs nilpotent part", criterion8);
  criterion(9, "sl(dim+1) embeddings verify; corner-trace variant fails", criterion9);
  criterion(10, "property suite over presets and 100 random functionals",
            criterion10);
  if (g_failed > 0) {
    std::printf("%d criterion(s) failed\n", g_failed);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
