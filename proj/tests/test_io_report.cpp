#include <doctest.h>

#include "core/analysis.hpp"
#include "core/catalog.hpp"
#include "helpers.hpp"

using namespace liefrob;
using nlohmann::ordered_json;
using testutil::q;

TEST_CASE("algebra files round-trip exactly over the rational field") {
  for (const auto& name : presetNames()) {
    Preset preset = examplePreset(name);
    std::string text = emitAlgebraFile(preset.algebra, preset.alpha);
    AlgebraFile parsed = parseAlgebraFile(text);
    CHECK(parsed.algebra.dim() == preset.algebra.dim());
    CHECK(parsed.algebra.basisLabels() == preset.algebra.basisLabels());
    REQUIRE(parsed.functional.has_value());
    CHECK(*parsed.functional == preset.alpha);
    for (int i = 0; i < preset.algebra.dim(); ++i)
      for (int j = i + 1; j < preset.algebra.dim(); ++j)
        CHECK(parsed.algebra.bracketBasis(i, j) ==
              preset.algebra.bracketBasis(i, j));
    // byte-identical re-emission
    CHECK(emitAlgebraFile(parsed.algebra, parsed.functional) == text);
  }
}

TEST_CASE("parse errors carry the Parse code") {
  auto expectParseError = [](const std::string& text) {
    try {
      parseAlgebraFile(text);
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  };
  expectParseError("not json at all");
  expectParseError("[]");
  expectParseError(R"({"format_version":1,"field":"rational","dim":0,"brackets":[]})");
  expectParseError(R"({"format_version":2,"field":"rational","dim":2,"brackets":[]})");
  expectParseError(R"({"format_version":1,"field":"decimal","dim":2,"brackets":[]})");
  // malformed scalar 1/0
  expectParseError(
      R"({"format_version":1,"field":"rational","dim":2,
          "brackets":[{"i":0,"j":1,"k":1,"c":"1/0"}]})");
  // i >= j
  expectParseError(
      R"({"format_version":1,"field":"rational","dim":2,
          "brackets":[{"i":1,"j":0,"k":1,"c":"1"}]})");
  // index out of range
  expectParseError(
      R"({"format_version":1,"field":"rational","dim":2,
          "brackets":[{"i":0,"j":2,"k":1,"c":"1"}]})");
  // tolerance on the exact field
  expectParseError(
      R"({"format_version":1,"field":"rational","tolerance":1e-9,"dim":2,"brackets":[]})");
}

TEST_CASE("complex64 files parse with tolerance") {
  std::string text = R"({
    "format_version": 1,
    "field": "complex64",
    "tolerance": 1e-8,
    "dim": 2,
    "basis": ["a", "b"],
    "brackets": [{"i":0,"j":1,"k":1,"c":{"re":1.0,"im":0.0}}]
  })";
  AlgebraFile file = parseAlgebraFile(text);
  CHECK(file.algebra.kind() == FieldKind::Approx);
  CHECK(file.algebra.field().tolerance == 1e-8);
  CHECK(file.algebra.bracketBasis(0, 1)[1] == Scalar::complex(1.0));
}

TEST_CASE("analysis reports are deterministic and text agrees with JSON") {
  Preset preset = examplePreset("g7b");
  AnalyzeOptions opt;
  opt.functional = preset.alpha;
  opt.functionalLabel = "file";
  ordered_json a = analyze(preset.algebra, opt);
  ordered_json b = analyze(preset.algebra, opt);
  CHECK(a.dump() == b.dump());

  CHECK(a["frobenius"]["status"] == "ok");
  CHECK(a["frobenius"]["x0"][0] == "1/2");
  CHECK(a["spectrum"]["eigen"]["diagonalizable_over_C"] == false);
  CHECK(a["spectrum"]["jordan"]["nilpotent_part_zero"] == false);
  CHECK(a["derivations"]["outer_dim"].get<int>() > 0);
  CHECK(a["unimodular"] == false);

  std::string text = renderText(a);
  CHECK(text.find("1/2*e-1") != std::string::npos);
  CHECK(text.find("-1/2 (alg 2, geom 1)") != std::string::npos);
  CHECK(text.find("nilpotent part nonzero") != std::string::npos);
  CHECK(text.find("diagonalizable over C: no") != std::string::npos);
}

TEST_CASE("analysis without any functional reports the search outcome") {
  // Heisenberg: odd dimension, certified not Frobenius.
  LieAlgebra heis(3, {}, FieldContext::exact());
  heis.addBracketTerm(0, 1, 2, q(1));
  ordered_json report = analyze(heis, {});
  CHECK(report["frobenius"]["status"] == "certified_not_frobenius");
  CHECK(report["lsa"]["status"] == "skipped");
  CHECK(report["spectrum"]["status"] == "skipped");
  // derivations still run without a functional
  CHECK(report["derivations"]["status"] == "ok");
  std::string text = renderText(report);
  CHECK(text.find("certified_not_frobenius") != std::string::npos);
}

TEST_CASE("analysis throws Validation for broken algebras") {
  LieAlgebra bad(3, {}, FieldContext::exact());
  bad.addBracketTerm(0, 1, 0, q(1));
  bad.addBracketTerm(0, 2, 1, q(1));
  try {
    analyze(bad, {});
    FAIL_CHECK("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Validation);
  }
  ordered_json report = validationToJson(bad);
  CHECK(report["valid"] == false);
  REQUIRE(report["jacobi_violations"].size() == 1);
  CHECK(report["jacobi_violations"][0]["triple"] == ordered_json({0, 1, 2}));
}

TEST_CASE("catalog builder covers every constructor") {
  AlgebraFile aff = buildCatalog({{"name", "aff"}, {"n", 2}});
  CHECK(aff.algebra.dim() == 6);
  CHECK_FALSE(aff.functional.has_value());

  AlgebraFile glsemi = buildCatalog({{"name", "glsemi"}, {"n", 2}, {"p", 2}});
  CHECK(glsemi.algebra.dim() == 8);

  ordered_json gkxiParams;
  gkxiParams["name"] = "gkxi";
  gkxiParams["n"] = 1;
  gkxiParams["k"] = "1";
  gkxiParams["diag"] = {"0", "1"};
  AlgebraFile gkxi = buildCatalog(gkxiParams);
  CHECK(gkxi.algebra.dim() == 4);
  REQUIRE(gkxi.functional.has_value());
  CHECK((*gkxi.functional)[1] == q(1));

  AlgebraFile golden = buildCatalog({{"name", "golden"}, {"n", 2}});
  CHECK(golden.algebra.dim() == 6);

  ordered_json diagParams;
  diagParams["name"] = "diagonal";
  diagParams["rates"] = {"1/2"};
  AlgebraFile diag = buildCatalog(diagParams);
  CHECK(diag.algebra.dim() == 4);

  ordered_json presetParams;
  presetParams["name"] = "preset";
  presetParams["preset"] = "g7c";
  presetParams["ktilde"] = "2";
  AlgebraFile c = buildCatalog(presetParams);
  CHECK(c.algebra.bracketBasis(0, 1)[1] == q(4)); // k = 2 k-tilde

  CHECK_THROWS_AS(buildCatalog({{"name", "unknown"}}), Error);
  CHECK_THROWS_AS(buildCatalog({{"name", "gkxi"}, {"n", 1}}), Error);
}

TEST_CASE("embed file content verifies before writing") {
  Preset preset = examplePreset("aff1");
  AnalyzeOptions opt;
  opt.functional = preset.alpha;
  ordered_json file = embedToJson(preset.algebra, opt);
  CHECK(file["kind"] == "sl_embedding");
  CHECK(file["size"] == 3);
  CHECK(file["images"].size() == 2);
  CHECK(file["verified"]["homomorphism"] == true);
  // spot-check phi(e2) = [[0,0,0],[-1,0,1],[0,0,0]]
  CHECK(file["images"][1][1][0] == "-1");
  CHECK(file["images"][1][1][2] == "1");
  std::string text = renderText(file);
  CHECK(text.find("sl(3)") != std::string::npos);
}

TEST_CASE("seeded searches make analysis deterministic end to end") {
  LieAlgebra l = affineAlgebra(2);
  AnalyzeOptions opt;
  opt.seed = 42;
  ordered_json a = analyze(l, opt);
  ordered_json b = analyze(l, opt);
  CHECK(a.dump() == b.dump());
  CHECK(a["frobenius"]["status"] == "ok");
  CHECK(a["seed"] == 42);
}
