#include <doctest.h>

#include "core/derivations.hpp"
#include "helpers.hpp"

using namespace liefrob;
using testutil::funInts;
using testutil::q;

namespace {

LieAlgebra aff1() {
  LieAlgebra l(2, {"e1", "e2"}, FieldContext::exact());
  l.addBracketTerm(0, 1, 1, q(1));
  return l;
}

} // namespace

TEST_CASE("derivation space of aff(1): maps e1 -> b e2, e2 -> d e2") {
  DerivationSpace space = derivationBasis(aff1());
  CHECK(space.dim() == 2);
  CHECK(space.innerDim() == 2);
  CHECK(space.outerDim == 0);
  for (const auto& d : space.basis) {
    CHECK(d.at(0, 0).isZero());
    CHECK(d.at(0, 1).isZero());
    CHECK(isDerivation(d, aff1()).ok);
  }
}

TEST_CASE("every linear map is a derivation of an abelian algebra") {
  for (int m : {1, 2, 3}) {
    LieAlgebra ab(m, {}, FieldContext::exact());
    DerivationSpace space = derivationBasis(ab);
    CHECK(space.dim() == m * m);
    CHECK(space.innerDim() == 0);
    CHECK(space.outerDim == m * m);
    CHECK_FALSE(allDerivationsInner(ab));
  }
}

TEST_CASE("aff(n) has only inner derivations") {
  for (int n : {1, 2}) {
    LieAlgebra l = affineAlgebra(n);
    DerivationSpace space = derivationBasis(l);
    CHECK(space.dim() == n * n + n);
    CHECK(space.outerDim == 0);
    CHECK(allDerivationsInner(l));
  }
}

TEST_CASE("inner derivations always satisfy the identity and span check") {
  for (const auto& name : presetNames()) {
    LieAlgebra l = examplePreset(name).algebra;
    DerivationSpace space = derivationBasis(l);
    CHECK(space.innerDim() == l.dim() - static_cast<int>(centerBasis(l).size()));
    for (int i = 0; i < l.dim(); ++i)
      CHECK(isDerivation(l.adBasis(i), l).ok);
    // inner basis sits inside the full derivation space
    std::vector<Vector> flat;
    for (const auto& d : space.basis) {
      std::vector<Scalar> v;
      for (int r = 0; r < l.dim(); ++r)
        for (int c = 0; c < l.dim(); ++c) v.push_back(d.at(r, c));
      flat.push_back(Vector(std::move(v)));
    }
    for (const auto& d : space.innerBasis) {
      std::vector<Scalar> v;
      for (int r = 0; r < l.dim(); ++r)
        for (int c = 0; c < l.dim(); ++c) v.push_back(d.at(r, c));
      CHECK(inSpan(flat, Vector(std::move(v)), l.field()));
    }
  }
}

TEST_CASE("the G_{k,xi} family carries outer derivations") {
  Preset preset = examplePreset("g7a");
  CHECK_FALSE(allDerivationsInner(preset.algebra));

  // k' = 1, xi' = I/2 is conformal and commutes with xi.
  FieldContext ctx = FieldContext::exact();
  Matrix m = Matrix::fromInts({{0, 0}, {0, 1}});
  GkXiSpec spec = makeGkXiSpec(1, q(1), m, ctx);
  Matrix half(2, 2, FieldKind::Exact);
  half.at(0, 0) = q(1, 2);
  half.at(1, 1) = q(1, 2);
  Matrix d = gkxiOuterDerivation(spec, q(1), half, ctx);
  CHECK(d == Matrix::diagonal({q(0), q(1), q(1, 2), q(1, 2)}));
  CHECK(isDerivation(d, preset.algebra).ok);

  // Not in the inner span.
  DerivationSpace space = derivationBasis(preset.algebra);
  std::vector<Vector> inner;
  for (const auto& b : space.innerBasis) {
    std::vector<Scalar> v;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) v.push_back(b.at(r, c));
    inner.push_back(Vector(std::move(v)));
  }
  std::vector<Scalar> dv;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) dv.push_back(d.at(r, c));
  CHECK_FALSE(inSpan(inner, Vector(std::move(dv)), ctx));
}

TEST_CASE("gkxi outer derivation rejects bad parameters") {
  FieldContext ctx = FieldContext::exact();
  Matrix m = Matrix::fromInts({{0, 0}, {0, 1}});
  GkXiSpec spec = makeGkXiSpec(1, q(1), m, ctx);

  // zero pair gives the zero derivation
  Matrix zero(2, 2, FieldKind::Exact);
  CHECK(gkxiOuterDerivation(spec, q(0), zero, ctx).isZero());

  // non-conformal xi': trace 2 cannot pair with factor 1
  Matrix bad = Matrix::fromInts({{1, 0}, {1, 1}});
  CHECK_FALSE(cspCheck(bad, q(1), 1, ctx));
  CHECK_THROWS_AS(gkxiOuterDerivation(spec, q(1), bad, ctx), Error);

  // conformal but not commuting with xi
  Matrix rot = Matrix::fromInts({{0, -1}, {1, 0}});
  CHECK(cspCheck(rot, q(0), 1, ctx));
  CHECK_THROWS_AS(gkxiOuterDerivation(spec, q(0), rot, ctx), Error);

  // xi' = xi, k' = k reproduces a derivation; record span membership.
  Matrix dXi = gkxiOuterDerivation(spec, q(1), m, ctx);
  CHECK(isDerivation(dXi, examplePreset("g7a").algebra).ok);
}

TEST_CASE("semisimplicity pipeline on aff(2): hypothesis true, nilpotent zero") {
  LieAlgebra l = affineAlgebra(2);
  auto found = findFrobeniusFunctional(l, 0);
  REQUIRE(found.status == FunctionalSearch::Status::Found);
  FrobeniusStructure f = principalElement(l, *found.found);
  PipelineReport report = principalSemisimplicityPipeline(l, f);
  CHECK(report.allInner);
  CHECK(report.nilpotentPartZero);
  CHECK(report.implicationHolds);
}

TEST_CASE("semisimplicity pipeline on g7b: hypothesis false, nilpotent nonzero") {
  Preset preset = examplePreset("g7b");
  FrobeniusStructure f = principalElement(preset.algebra, preset.alpha);
  PipelineReport report = principalSemisimplicityPipeline(preset.algebra, f);
  CHECK_FALSE(report.allInner);
  CHECK_FALSE(report.nilpotentPartZero);
  CHECK(report.implicationHolds);
}

TEST_CASE("direct sums of inner-derivation algebras stay in the pipeline") {
  LieAlgebra sum = directSum(aff1(), aff1());
  auto found = findFrobeniusFunctional(sum, 0);
  REQUIRE(found.status == FunctionalSearch::Status::Found);
  FrobeniusStructure f = principalElement(sum, *found.found);
  PipelineReport report = principalSemisimplicityPipeline(sum, f);
  CHECK(report.allInner);
  CHECK(report.nilpotentPartZero);
  CHECK(report.implicationHolds);
}

TEST_CASE("semisimplicity pipeline on g7a: hypothesis false, nilpotent zero") {
  Preset preset = examplePreset("g7a");
  FrobeniusStructure f = principalElement(preset.algebra, preset.alpha);
  PipelineReport report = principalSemisimplicityPipeline(preset.algebra, f);
  CHECK_FALSE(report.allInner);
  CHECK(report.nilpotentPartZero);
  CHECK(report.implicationHolds);
}
