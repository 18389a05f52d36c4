#include <doctest.h>

#include "core/catalog.hpp"
#include "core/frobenius.hpp"
#include "core/sl_embed.hpp"
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

LsaProduct aff1Lsa(const LieAlgebra& l) {
  return lsaFromFrobenius(l, principalElement(l, funInts({0, 1})));
}

} // namespace

TEST_CASE("abelian algebras embed strictly upper-triangularly") {
  LieAlgebra ab(3, {}, FieldContext::exact());
  LsaProduct zero(3, FieldKind::Exact);
  SlEmbedding e = embed(ab, zero);
  REQUIRE(e.sourceDim() == 3);
  for (int b = 0; b < 3; ++b) {
    const Matrix& img = e.images[static_cast<size_t>(b)];
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c <= r; ++c) CHECK(img.at(r, c).isZero());
    CHECK(img.at(b, 3) == q(1));
  }
  CHECK(verifyEmbedding(e, ab).ok());
}

TEST_CASE("the aff(1) embedding matches the hand computation") {
  LieAlgebra l = aff1();
  SlEmbedding e = embed(l, aff1Lsa(l));
  Matrix phi1(3, 3, FieldKind::Exact);
  phi1.at(0, 0) = q(-2, 3);
  phi1.at(1, 1) = q(1, 3);
  phi1.at(2, 2) = q(1, 3);
  phi1.at(0, 2) = q(1);
  CHECK(e.images[0] == phi1);
  Matrix phi2(3, 3, FieldKind::Exact);
  phi2.at(1, 0) = q(-1);
  phi2.at(1, 2) = q(1);
  CHECK(e.images[1] == phi2);

  EmbeddingCheck check = verifyEmbedding(e, l);
  CHECK(check.ok());
  // [phi(e1), phi(e2)] = phi(e2) by hand.
  CHECK(e.images[0] * e.images[1] - e.images[1] * e.images[0] == e.images[1]);
}

TEST_CASE("the corner-trace variant fails the homomorphism check on aff(1)") {
  LieAlgebra l = aff1();
  SlEmbedding literal = embedCornerTraceOnly(l, aff1Lsa(l));
  EmbeddingCheck check = verifyEmbedding(literal, l);
  CHECK(check.traceless);
  CHECK_FALSE(check.homomorphism);
  CHECK(check.detail.find("e1") != std::string::npos);
  CHECK(check.detail.find("e2") != std::string::npos);
}

TEST_CASE("embedding verifies on every preset and lands in sl(dim+1)") {
  for (const auto& name : presetNames()) {
    Preset preset = examplePreset(name);
    const LieAlgebra& l = preset.algebra;
    FrobeniusStructure f = principalElement(l, preset.alpha);
    LsaProduct p = lsaFromFrobenius(l, f);
    SlEmbedding e = embed(l, p);
    CHECK(e.targetSize() == l.dim() + 1);
    CHECK(verifyEmbedding(e, l).ok());

    // Change-of-representation trace consistency: the matrix of
    // ad(phi(x0)) restricted to phi(G) in the phi(e_i) basis is ad(x0).
    Matrix adX0 = l.ad(f.x0);
    Matrix phiX0(l.dim() + 1, l.dim() + 1, l.kind());
    for (int i = 0; i < l.dim(); ++i)
      phiX0 = phiX0 + e.images[static_cast<size_t>(i)].scaled(f.x0[i]);
    Scalar traceInside = Scalar::zero(l.kind());
    for (int i = 0; i < l.dim(); ++i) {
      Matrix lhs = phiX0 * e.images[static_cast<size_t>(i)] -
                   e.images[static_cast<size_t>(i)] * phiX0;
      // coefficient of phi(e_i) in [phi(x0), phi(e_i)] equals ad(x0)[i][i]
      traceInside += adX0.at(i, i);
      Matrix rhs(l.dim() + 1, l.dim() + 1, l.kind());
      for (int b = 0; b < l.dim(); ++b)
        rhs = rhs + e.images[static_cast<size_t>(b)].scaled(adX0.at(b, i));
      CHECK(lhs == rhs);
    }
    CHECK(traceInside == adX0.trace());
  }
}

TEST_CASE("zero-dimensional algebras are rejected at embedding construction") {
  LieAlgebra zero(0, {}, FieldContext::exact());
  LsaProduct none(0, FieldKind::Exact);
  CHECK_THROWS_AS(embed(zero, none), Error);
}
