#include "core/analysis.hpp"

#include <sstream>

#include "core/derivations.hpp"
#include "core/frobenius.hpp"
#include "core/lsa.hpp"
#include "core/sl_embed.hpp"
#include "core/spectral.hpp"

namespace liefrob {

using nlohmann::ordered_json;

namespace {

ordered_json vectorToJson(const Vector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& c : v.coords) a.push_back(scalarToJson(c));
  return a;
}

ordered_json functionalToJson(const Functional& f) {
  ordered_json a = ordered_json::array();
  for (const auto& c : f.coords) a.push_back(scalarToJson(c));
  return a;
}

ordered_json matrixToJson(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalarToJson(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json polynomialToJson(const Polynomial& p) {
  ordered_json j;
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(scalarToJson(c));
  j["coefficients_ascending"] = std::move(coeffs);
  j["text"] = p.str();
  return j;
}

ordered_json algebraSummary(const LieAlgebra& l) {
  ordered_json j;
  j["dim"] = l.dim();
  j["field"] = fieldKindName(l.kind());
  if (l.kind() == FieldKind::Approx) j["tolerance"] = l.field().tolerance;
  j["basis"] = l.basisLabels();
  return j;
}

ordered_json skipped(const std::string& reason) {
  ordered_json j;
  j["status"] = "skipped";
  j["reason"] = reason;
  return j;
}

} // namespace

ordered_json validationToJson(const LieAlgebra& l) {
  ordered_json j;
  j["format_version"] = 1;
  j["kind"] = "validation";
  j["algebra"] = algebraSummary(l);
  ValidationReport report = l.validate();
  j["valid"] = report.valid();
  ordered_json viols = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json entry;
    entry["triple"] = {v.i, v.j, v.k};
    entry["labels"] = {l.basisLabels()[static_cast<size_t>(v.i)],
                       l.basisLabels()[static_cast<size_t>(v.j)],
                       l.basisLabels()[static_cast<size_t>(v.k)]};
    entry["residual"] = vectorToJson(v.residual);
    viols.push_back(std::move(entry));
  }
  j["jacobi_violations"] = std::move(viols);
  return j;
}

namespace {

void fillFrobeniusSections(ordered_json& j, const LieAlgebra& l,
                           const FrobeniusStructure& f) {
  const FieldContext& ctx = l.field();
  ordered_json& fro = j["frobenius"];
  fro["status"] = "ok";
  fro["alpha"] = functionalToJson(f.alpha);
  fro["det_omega"] = scalarToJson(determinant(f.omega, ctx));
  fro["omega"] = matrixToJson(f.omega);
  fro["q_matrix"] = matrixToJson(f.qMatrix);
  fro["x0"] = vectorToJson(f.x0);
  fro["r_tensor"] = matrixToJson(rTensor(f));

  LsaProduct lsa = lsaFromFrobenius(l, f);
  {
    ordered_json section;
    section["status"] = "ok";
    ordered_json table = ordered_json::array();
    for (int i = 0; i < lsa.dim; ++i)
      for (int jj = 0; jj < lsa.dim; ++jj)
        for (int k = 0; k < lsa.dim; ++k) {
          const Scalar& c = lsa.coeff(k, i, jj);
          if (c.isZero()) continue;
          ordered_json term;
          term["i"] = i;
          term["j"] = jj;
          term["k"] = k;
          term["c"] = scalarToJson(c);
          table.push_back(std::move(term));
        }
    section["table"] = std::move(table);
    j["lsa"] = std::move(section);
  }

  {
    RightUnitSet set = rightUnitSet(l, f);
    ordered_json section;
    section["status"] = "ok";
    section["x0"] = vectorToJson(set.x0);
    ordered_json nils = ordered_json::array();
    for (const auto& nil : set.nilBasis) nils.push_back(vectorToJson(nil));
    section["right_nil_basis"] = std::move(nils);
    section["right_nil_dim"] = static_cast<int>(set.nilBasis.size());
    j["right_units"] = std::move(section);

    ordered_json conf;
    conf["status"] = "ok";
    auto x0Factor = conformalFactor(l, f, set.x0);
    conf["x0_factor"] =
        x0Factor ? scalarToJson(*x0Factor) : ordered_json(nullptr);
    ordered_json nilFactors = ordered_json::array();
    for (const auto& nil : set.nilBasis) {
      auto lam = conformalFactor(l, f, nil);
      nilFactors.push_back(lam ? scalarToJson(*lam) : ordered_json(nullptr));
    }
    conf["right_nil_factors"] = std::move(nilFactors);
    j["conformal"] = std::move(conf);
  }

  {
    TraceIdentityResult tr = traceIdentityCheck(l, f);
    ordered_json section;
    section["status"] = "ok";
    section["trace_ad_x0"] = scalarToJson(tr.trace);
    section["expected"] = scalarToJson(tr.expected);
    section["trace_matches"] = tr.traceMatches;
    section["x0_outside_derived_ideal"] = tr.outsideDerivedIdeal;
    section["ok"] = tr.ok();
    j["trace_identity"] = std::move(section);
  }

  {
    Matrix adX0 = l.ad(f.x0);
    ordered_json section;
    section["status"] = "ok";
    section["ad_x0"] = matrixToJson(adX0);
    section["char_poly"] = polynomialToJson(charPoly(adX0));
    EigenReport er = eigenReport(adX0, ctx);
    ordered_json spectrum;
    ordered_json rats = ordered_json::array();
    for (const auto& e : er.rationalEigenvalues) {
      ordered_json entry;
      entry["value"] = scalarToJson(e.value);
      entry["algebraic"] = e.algebraic;
      entry["geometric"] = e.geometric;
      rats.push_back(std::move(entry));
    }
    spectrum["rational_eigenvalues"] = std::move(rats);
    if (ctx.kind == FieldKind::Exact)
      spectrum["residual_factor"] = polynomialToJson(er.residualFactor);
    ordered_json numeric = ordered_json::array();
    for (const auto& [z, mult] : er.numericEigenvalues) {
      ordered_json entry;
      entry["re"] = z.real();
      entry["im"] = z.imag();
      entry["multiplicity"] = mult;
      numeric.push_back(std::move(entry));
    }
    spectrum["numeric_eigenvalues"] = std::move(numeric);
    spectrum["diagonalizable_over_C"] = er.diagonalizableOverC;
    spectrum["diagonalizable_over_base"] = er.diagonalizableOverBase;
    spectrum["numeric_assisted"] = er.numericAssisted;
    if (er.semisimpleKnown) spectrum["is_semisimple"] = er.semisimple;
    section["eigen"] = std::move(spectrum);

    if (ctx.kind == FieldKind::Exact) {
      JordanPair jc = jordanChevalley(adX0);
      ordered_json jordan;
      jordan["status"] = "ok";
      jordan["semisimple_part"] = matrixToJson(jc.s);
      jordan["nilpotent_part"] = matrixToJson(jc.n);
      jordan["nilpotent_part_zero"] = jc.n.isZero();
      section["jordan"] = std::move(jordan);
    } else {
      section["jordan"] =
          skipped("Jordan-Chevalley decomposition requires the rational field");
    }
    j["spectrum"] = std::move(section);
  }

  {
    LsaProduct lsaAgain = lsa;
    SlEmbedding emb = embed(l, lsaAgain);
    EmbeddingCheck check = verifyEmbedding(emb, l);
    ordered_json section;
    section["status"] = check.ok() ? "ok" : "failed";
    section["target"] = "sl(" + std::to_string(emb.targetSize()) + ")";
    section["traceless"] = check.traceless;
    section["homomorphism"] = check.homomorphism;
    section["injective"] = check.injective;
    if (!check.detail.empty()) section["detail"] = check.detail;
    j["embedding"] = std::move(section);
  }
}

} // namespace

ordered_json analyze(const LieAlgebra& l, const AnalyzeOptions& opt) {
  ValidationReport validation = l.validate();
  if (!validation.valid())
    throwError(ErrorCode::Validation,
               "algebra fails the Jacobi identity on " +
                   std::to_string(validation.violations.size()) + " triple(s)");

  ordered_json j;
  j["format_version"] = 1;
  j["kind"] = "analysis";
  j["seed"] = opt.seed;
  j["algebra"] = algebraSummary(l);
  j["validation"] = validationToJson(l);
  j["unimodular"] = isUnimodular(l);

  {
    DerivationSpace space = derivationBasis(l);
    ordered_json section;
    section["status"] = "ok";
    section["dim"] = space.dim();
    section["inner_dim"] = space.innerDim();
    section["outer_dim"] = space.outerDim;
    section["all_inner"] = space.outerDim == 0;
    ordered_json basis = ordered_json::array();
    for (const auto& d : space.basis) basis.push_back(matrixToJson(d));
    section["basis"] = std::move(basis);
    ordered_json inner = ordered_json::array();
    for (const auto& d : space.innerBasis) inner.push_back(matrixToJson(d));
    section["inner_basis"] = std::move(inner);
    j["derivations"] = std::move(section);
  }

  std::optional<Functional> alpha = opt.functional;
  std::string source = alpha ? opt.functionalLabel : "";
  std::string failReason;
  if (alpha) {
    if (alpha->dim() != l.dim())
      throwError(ErrorCode::Argument, "functional dimension mismatch");
    if (!isFrobeniusFunctional(l, *alpha)) {
      failReason = "supplied functional has a degenerate coboundary form";
      alpha.reset();
      source = "functional_degenerate";
    }
  } else {
    FunctionalSearch search = findFrobeniusFunctional(l, opt.seed);
    if (search.status == FunctionalSearch::Status::Found) {
      alpha = search.found;
      source = search.source;
    } else {
      source = search.status == FunctionalSearch::Status::CertifiedNone
                   ? "certified_none"
                   : "not_found";
      failReason = search.note;
    }
  }

  if (!alpha) {
    ordered_json fro;
    fro["status"] = source == "certified_none" ? "certified_not_frobenius"
                    : source == "functional_degenerate" ? "functional_degenerate"
                                                        : "not_found";
    fro["reason"] = failReason;
    j["frobenius"] = std::move(fro);
    std::string skip = "no Frobenius functional available";
    j["lsa"] = skipped(skip);
    j["right_units"] = skipped(skip);
    j["conformal"] = skipped(skip);
    j["trace_identity"] = skipped(skip);
    j["spectrum"] = skipped(skip);
    j["embedding"] = skipped(skip);
    return j;
  }

  FrobeniusStructure f = principalElement(l, *alpha);
  j["frobenius"] = ordered_json::object();
  j["frobenius"]["alpha_source"] = source;
  fillFrobeniusSections(j, l, f);
  return j;
}

ordered_json embedToJson(const LieAlgebra& l, const AnalyzeOptions& opt) {
  requireValid(l);
  std::optional<Functional> alpha = opt.functional;
  if (!alpha) {
    FunctionalSearch search = findFrobeniusFunctional(l, opt.seed);
    if (search.status != FunctionalSearch::Status::Found)
      throwError(ErrorCode::NotFrobenius,
                 "no Frobenius functional found; cannot induce a product");
    alpha = search.found;
  }
  FrobeniusStructure f = principalElement(l, *alpha);
  LsaProduct lsa = lsaFromFrobenius(l, f);
  SlEmbedding emb = embed(l, lsa);
  EmbeddingCheck check = verifyEmbedding(emb, l);
  if (!check.ok())
    throwError(ErrorCode::Verification,
               "embedding verification failed: " + check.detail);
  ordered_json j;
  j["format_version"] = 1;
  j["kind"] = "sl_embedding";
  j["algebra"] = algebraSummary(l);
  j["target"] = "sl(" + std::to_string(emb.targetSize()) + ")";
  j["size"] = emb.targetSize();
  ordered_json images = ordered_json::array();
  for (const auto& img : emb.images) images.push_back(matrixToJson(img));
  j["images"] = std::move(images);
  ordered_json verified;
  verified["traceless"] = check.traceless;
  verified["homomorphism"] = check.homomorphism;
  verified["injective"] = check.injective;
  j["verified"] = std::move(verified);
  return j;
}

AlgebraFile buildCatalog(const ordered_json& params) {
  if (!params.is_object() || !params.contains("name") ||
      !params["name"].is_string())
    throwError(ErrorCode::Argument, "catalog parameters need a name");
  std::string name = params["name"].get<std::string>();

  auto intParam = [&](const std::string& key) {
    if (!params.contains(key) || !params[key].is_number_integer())
      throwError(ErrorCode::Argument, "catalog '" + name + "' needs integer " + key);
    return params[key].get<int>();
  };

  AlgebraFile out;
  if (name == "aff") {
    out.algebra = affineAlgebra(intParam("n"));
    return out;
  }
  if (name == "glsemi") {
    out.algebra = glSemidirect(intParam("n"), intParam("p"));
    return out;
  }
  if (name == "golden") {
    out.algebra = goldenInstance(intParam("n"));
    out.functional =
        Functional::dualBasis(out.algebra.dim(), 1, FieldKind::Exact);
    return out;
  }
  if (name == "gkxi") {
    int n = intParam("n");
    FieldContext ctx = FieldContext::exact();
    if (params.contains("field") &&
        params["field"].get<std::string>() == "complex64")
      ctx = FieldContext::approx();
    Scalar k = scalarFromJson(params.contains("k") ? params["k"]
                                                   : ordered_json("1"),
                              ctx.kind);
    Matrix m(2 * n, 2 * n, ctx.kind);
    if (params.contains("diag")) {
      if (!params["diag"].is_array() ||
          static_cast<int>(params["diag"].size()) != 2 * n)
        throwError(ErrorCode::Argument, "gkxi diag needs 2n entries");
      for (int i = 0; i < 2 * n; ++i)
        m.at(i, i) = scalarFromJson(params["diag"][static_cast<size_t>(i)], ctx.kind);
    } else if (params.contains("m")) {
      if (!params["m"].is_array() ||
          static_cast<int>(params["m"].size()) != 2 * n)
        throwError(ErrorCode::Argument, "gkxi m needs 2n rows");
      for (int r = 0; r < 2 * n; ++r) {
        const auto& row = params["m"][static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != 2 * n)
          throwError(ErrorCode::Argument, "gkxi m needs 2n x 2n entries");
        for (int c = 0; c < 2 * n; ++c)
          m.at(r, c) = scalarFromJson(row[static_cast<size_t>(c)], ctx.kind);
      }
    } else {
      throwError(ErrorCode::Argument, "gkxi needs either m or diag");
    }
    out.algebra = gKXi(makeGkXiSpec(n, k, m, ctx), ctx);
    out.functional = Functional::dualBasis(out.algebra.dim(), 1, ctx.kind);
    return out;
  }
  if (name == "diagonal") {
    if (!params.contains("rates") || !params["rates"].is_array() ||
        params["rates"].empty())
      throwError(ErrorCode::Argument, "diagonal needs a nonempty rates array");
    FieldContext ctx = FieldContext::exact();
    if (params.contains("field") &&
        params["field"].get<std::string>() == "complex64")
      ctx = FieldContext::approx();
    std::vector<Scalar> rates;
    for (const auto& r : params["rates"])
      rates.push_back(scalarFromJson(r, ctx.kind));
    out.algebra =
        diagonalInstance(static_cast<int>(rates.size()), rates, ctx);
    out.functional = Functional::dualBasis(out.algebra.dim(), 1, ctx.kind);
    return out;
  }
  if (name == "preset") {
    if (!params.contains("preset") || !params["preset"].is_string())
      throwError(ErrorCode::Argument, "preset catalog needs a preset name");
    Preset preset =
        params.contains("ktilde")
            ? examplePreset(params["preset"].get<std::string>(),
                            scalarFromJson(params["ktilde"], FieldKind::Exact))
            : examplePreset(params["preset"].get<std::string>());
    out.algebra = std::move(preset.algebra);
    out.functional = std::move(preset.alpha);
    return out;
  }
  throwError(ErrorCode::Argument,
             "unknown catalog name '" + name +
                 "' (expected aff, glsemi, gkxi, golden, diagonal or preset)");
}

namespace {

std::string scalarText(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_object() && j.contains("re")) {
    std::ostringstream os;
    os.precision(17);
    os << j["re"].get<double>();
    double im = j["im"].get<double>();
    if (im != 0) os << (im > 0 ? "+" : "") << im << "i";
    return os.str();
  }
  return j.dump();
}

std::string combinationText(const ordered_json& coords,
                            const std::vector<std::string>& labels,
                            bool dual) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords.size(); ++i) {
    std::string c = scalarText(coords[i]);
    if (c == "0") continue;
    bool neg = !c.empty() && c[0] == '-';
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = c.substr(1);
    if (c != "1") os << c << "*";
    os << labels[i] << (dual ? "*" : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::string> labelsOf(const ordered_json& report) {
  std::vector<std::string> labels;
  for (const auto& b : report["algebra"]["basis"])
    labels.push_back(b.get<std::string>());
  return labels;
}

std::string renderValidationText(const ordered_json& j) {
  std::ostringstream os;
  const auto& alg = j["algebra"];
  os << "Lie algebra: dim " << alg["dim"].get<int>() << " over "
     << alg["field"].get<std::string>() << " field\n";
  if (j["valid"].get<bool>()) {
    os << "Validation: OK (antisymmetry by storage, Jacobi verified)\n";
  } else {
    os << "Validation: FAILED\n";
    for (const auto& v : j["jacobi_violations"]) {
      os << "  Jacobi violated on (" << v["labels"][0].get<std::string>()
         << ", " << v["labels"][1].get<std::string>() << ", "
         << v["labels"][2].get<std::string>() << "), residual [";
      bool first = true;
      for (const auto& c : v["residual"]) {
        if (!first) os << ", ";
        os << scalarText(c);
        first = false;
      }
      os << "]\n";
    }
  }
  return os.str();
}

void renderSectionStatus(std::ostringstream& os, const ordered_json& section,
                         const std::string& title) {
  os << title << ": skipped (" << section["reason"].get<std::string>() << ")\n";
}

std::string renderAnalysisText(const ordered_json& j) {
  std::ostringstream os;
  auto labels = labelsOf(j);
  const auto& alg = j["algebra"];
  os << "Lie algebra: dim " << alg["dim"].get<int>() << " over "
     << alg["field"].get<std::string>() << " field (basis ";
  for (size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : "") << labels[i];
  os << ")\n";
  os << "Validation: OK\n";
  os << "Unimodular: " << (j["unimodular"].get<bool>() ? "yes" : "no") << "\n";

  const auto& der = j["derivations"];
  os << "Derivations: dim " << der["dim"].get<int>() << " (inner "
     << der["inner_dim"].get<int>() << ", outer " << der["outer_dim"].get<int>()
     << ")" << (der["all_inner"].get<bool>() ? " - all derivations inner" : "")
     << "\n";

  const auto& fro = j["frobenius"];
  std::string status = fro["status"].get<std::string>();
  if (status != "ok") {
    os << "Frobenius functional: " << status;
    if (fro.contains("reason"))
      os << " (" << fro["reason"].get<std::string>() << ")";
    os << "\n";
    return os.str();
  }

  os << "Frobenius functional: alpha = "
     << combinationText(fro["alpha"], labels, /*dual=*/true) << " (source: "
     << fro["alpha_source"].get<std::string>() << "), det(Omega) = "
     << scalarText(fro["det_omega"]) << "\n";
  os << "Principal element: x0 = "
     << combinationText(fro["x0"], labels, /*dual=*/false) << "\n";

  os << "LSA table (nonzero products):";
  const auto& table = j["lsa"]["table"];
  if (table.empty()) os << " all products vanish";
  os << "\n";
  for (const auto& t : table) {
    os << "  " << labels[t["i"].get<size_t>()] << "*"
       << labels[t["j"].get<size_t>()] << " += " << scalarText(t["c"]) << "*"
       << labels[t["k"].get<size_t>()] << "\n";
  }

  const auto& ru = j["right_units"];
  os << "Right units: x0 + span{";
  for (size_t i = 0; i < ru["right_nil_basis"].size(); ++i)
    os << (i ? "; " : "")
       << combinationText(ru["right_nil_basis"][i], labels, false);
  os << "} (right-nil dim " << ru["right_nil_dim"].get<int>() << ")\n";

  const auto& conf = j["conformal"];
  os << "Conformal factors: lambda(x0) = " << scalarText(conf["x0_factor"]);
  if (!conf["right_nil_factors"].empty()) {
    os << ", right-nil factors:";
    for (const auto& c : conf["right_nil_factors"]) os << " " << scalarText(c);
  }
  os << "\n";

  const auto& tr = j["trace_identity"];
  os << "Trace identity: trace(ad x0) = " << scalarText(tr["trace_ad_x0"])
     << ", expected " << scalarText(tr["expected"]) << ", x0 outside [g,g]: "
     << (tr["x0_outside_derived_ideal"].get<bool>() ? "yes" : "no") << "\n";

  const auto& spec = j["spectrum"];
  os << "Spectrum of ad(x0): char poly "
     << spec["char_poly"]["text"].get<std::string>() << "\n";
  const auto& sp = spec["eigen"];
  if (!sp["rational_eigenvalues"].empty()) {
    os << "  rational eigenvalues:";
    for (const auto& e : sp["rational_eigenvalues"])
      os << " " << scalarText(e["value"]) << " (alg " << e["algebraic"].get<int>()
         << ", geom " << e["geometric"].get<int>() << ")";
    os << "\n";
  }
  if (sp.contains("residual_factor") &&
      sp["residual_factor"]["text"].get<std::string>() != "1")
    os << "  residual factor: " << sp["residual_factor"]["text"].get<std::string>()
       << "\n";
  if (!sp["numeric_eigenvalues"].empty()) {
    os << "  numeric eigenvalues:";
    std::ostringstream tmp;
    tmp.precision(17);
    for (const auto& e : sp["numeric_eigenvalues"]) {
      tmp.str("");
      double re = e["re"].get<double>(), im = e["im"].get<double>();
      tmp << re;
      if (im != 0) tmp << (im > 0 ? "+" : "") << im << "i";
      os << " " << tmp.str() << " (x" << e["multiplicity"].get<int>() << ")";
    }
    os << "\n";
  }
  os << "  diagonalizable over C: "
     << (sp["diagonalizable_over_C"].get<bool>() ? "yes" : "no")
     << ", over the base field: "
     << (sp["diagonalizable_over_base"].get<bool>() ? "yes" : "no");
  if (sp["numeric_assisted"].get<bool>()) os << " [numeric-assisted]";
  os << "\n";
  if (sp.contains("is_semisimple"))
    os << "  semisimple: " << (sp["is_semisimple"].get<bool>() ? "yes" : "no")
       << "\n";
  if (spec["jordan"].contains("status") &&
      spec["jordan"]["status"].get<std::string>() == "ok") {
    os << "  Jordan split: nilpotent part "
       << (spec["jordan"]["nilpotent_part_zero"].get<bool>() ? "zero"
                                                             : "nonzero")
       << "\n";
  } else if (spec["jordan"].contains("reason")) {
    renderSectionStatus(os, spec["jordan"], "  Jordan split");
  }

  const auto& emb = j["embedding"];
  if (emb["status"].get<std::string>() == "skipped") {
    renderSectionStatus(os, emb, "Embedding");
  } else {
    os << "Embedding into " << emb["target"].get<std::string>()
       << ": traceless " << (emb["traceless"].get<bool>() ? "yes" : "no")
       << ", bracket-preserving "
       << (emb["homomorphism"].get<bool>() ? "yes" : "no") << ", injective "
       << (emb["injective"].get<bool>() ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string renderEmbeddingText(const ordered_json& j) {
  std::ostringstream os;
  const auto& alg = j["algebra"];
  os << "Embedding of dim-" << alg["dim"].get<int>() << " algebra into "
     << j["target"].get<std::string>() << "\n";
  const auto& v = j["verified"];
  os << "Verified: traceless " << (v["traceless"].get<bool>() ? "yes" : "no")
     << ", bracket-preserving " << (v["homomorphism"].get<bool>() ? "yes" : "no")
     << ", injective " << (v["injective"].get<bool>() ? "yes" : "no") << "\n";
  os << "Images: " << j["images"].size() << " matrices of size "
     << j["size"].get<int>() << " x " << j["size"].get<int>() << "\n";
  return os.str();
}

} // namespace

std::string renderText(const ordered_json& report) {
  if (!report.is_object() || !report.contains("kind"))
    throwError(ErrorCode::Argument, "not a structured report");
  std::string kind = report["kind"].get<std::string>();
  if (kind == "validation") return renderValidationText(report);
  if (kind == "analysis") return renderAnalysisText(report);
  if (kind == "sl_embedding") return renderEmbeddingText(report);
  throwError(ErrorCode::Argument, "unknown report kind '" + kind + "'");
}

} // namespace liefrob
