#include "core/algebra_io.hpp"

namespace liefrob {

using nlohmann::ordered_json;

nlohmann::ordered_json scalarToJson(const Scalar& s) {
  if (s.exact()) return s.str();
  auto z = s.cx();
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

Scalar scalarFromJson(const ordered_json& j, FieldKind kind) {
  if (kind == FieldKind::Exact) {
    if (j.is_string()) return Scalar::rationalFromString(j.get<std::string>());
    if (j.is_number_integer())
      return Scalar::rational(j.get<long>());
    throwError(ErrorCode::Parse,
               "rational scalar must be a \"p/q\" string or an integer");
  }
  if (j.is_object() && j.contains("re") && j.contains("im") &&
      j["re"].is_number() && j["im"].is_number())
    return Scalar::complex(j["re"].get<double>(), j["im"].get<double>());
  if (j.is_number()) return Scalar::complex(j.get<double>());
  if (j.is_string()) {
    // "re" or "re:im", or a "p/q" rational read into the complex field
    std::string s = j.get<std::string>();
    try {
      size_t colon = s.find(':');
      if (colon != std::string::npos) {
        size_t usedRe = 0, usedIm = 0;
        double re = std::stod(s.substr(0, colon), &usedRe);
        std::string imText = s.substr(colon + 1);
        double im = std::stod(imText, &usedIm);
        if (usedRe != colon || usedIm != imText.size())
          throwError(ErrorCode::Parse, "invalid complex scalar '" + s + "'");
        return Scalar::complex(re, im);
      }
      if (s.find('/') != std::string::npos) {
        Scalar r = Scalar::rationalFromString(s);
        return Scalar::complex(r.rat().get_d());
      }
      size_t used = 0;
      double re = std::stod(s, &used);
      if (used != s.size())
        throwError(ErrorCode::Parse, "invalid complex scalar '" + s + "'");
      return Scalar::complex(re);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throwError(ErrorCode::Parse, "invalid complex scalar '" + s + "'");
    }
  }
  throwError(ErrorCode::Parse,
             "complex scalar must be {re, im}, a number, or a numeric string");
}

AlgebraFile parseAlgebraFile(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throwError(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throwError(ErrorCode::Parse, "top level must be an object");
    if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != kAlgebraFormatVersion)
      throwError(ErrorCode::Parse, "missing or unsupported format_version");
    if (!j.contains("field") || !j["field"].is_string())
      throwError(ErrorCode::Parse, "missing field kind");
    std::string fieldName = j["field"].get<std::string>();
    FieldContext ctx;
    if (fieldName == "rational") {
      if (j.contains("tolerance"))
        throwError(ErrorCode::Parse, "tolerance is only valid for complex64");
      ctx = FieldContext::exact();
    } else if (fieldName == "complex64") {
      double tol = 1e-9;
      if (j.contains("tolerance")) {
        if (!j["tolerance"].is_number() || !(j["tolerance"].get<double>() > 0))
          throwError(ErrorCode::Parse, "tolerance must be a positive number");
        tol = j["tolerance"].get<double>();
      }
      ctx = FieldContext::approx(tol);
    } else {
      throwError(ErrorCode::Parse, "field must be \"rational\" or \"complex64\"");
    }

    if (!j.contains("dim") || !j["dim"].is_number_integer() ||
        j["dim"].get<int>() < 1)
      throwError(ErrorCode::Parse, "dim must be a positive integer");
    int dim = j["dim"].get<int>();

    std::vector<std::string> labels;
    if (j.contains("basis")) {
      if (!j["basis"].is_array() ||
          static_cast<int>(j["basis"].size()) != dim)
        throwError(ErrorCode::Parse, "basis must list dim labels");
      for (const auto& b : j["basis"]) {
        if (!b.is_string()) throwError(ErrorCode::Parse, "basis labels must be strings");
        labels.push_back(b.get<std::string>());
      }
    }

    AlgebraFile file;
    file.algebra = LieAlgebra(dim, std::move(labels), ctx);
    if (!j.contains("brackets") || !j["brackets"].is_array())
      throwError(ErrorCode::Parse, "missing brackets array");
    for (const auto& t : j["brackets"]) {
      if (!t.is_object() || !t.contains("i") || !t.contains("j") ||
          !t.contains("k") || !t.contains("c"))
        throwError(ErrorCode::Parse, "bracket terms need i, j, k, c");
      if (!t["i"].is_number_integer() || !t["j"].is_number_integer() ||
          !t["k"].is_number_integer())
        throwError(ErrorCode::Parse, "bracket indices must be integers");
      int i = t["i"].get<int>(), jj = t["j"].get<int>(), k = t["k"].get<int>();
      if (i < 0 || jj < 0 || k < 0 || i >= dim || jj >= dim || k >= dim)
        throwError(ErrorCode::Parse, "bracket index out of range");
      if (i >= jj)
        throwError(ErrorCode::Parse, "bracket terms require i < j");
      file.algebra.addBracketTerm(i, jj, k, scalarFromJson(t["c"], ctx.kind));
    }

    if (j.contains("functional")) {
      if (!j["functional"].is_array() ||
          static_cast<int>(j["functional"].size()) != dim)
        throwError(ErrorCode::Parse, "functional must list dim coordinates");
      Functional alpha = Functional::zero(dim, ctx.kind);
      int idx = 0;
      for (const auto& c : j["functional"])
        alpha[idx++] = scalarFromJson(c, ctx.kind);
      file.functional = std::move(alpha);
    }
    return file;
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throwError(ErrorCode::Parse, std::string("malformed algebra file: ") + e.what());
  }
}

ordered_json algebraToJson(const LieAlgebra& l,
                           const std::optional<Functional>& alpha) {
  ordered_json j;
  j["format_version"] = kAlgebraFormatVersion;
  j["field"] = fieldKindName(l.kind());
  if (l.kind() == FieldKind::Approx) j["tolerance"] = l.field().tolerance;
  j["dim"] = l.dim();
  j["basis"] = l.basisLabels();
  ordered_json brackets = ordered_json::array();
  for (const auto& t : l.terms()) {
    ordered_json term;
    term["i"] = t.i;
    term["j"] = t.j;
    term["k"] = t.k;
    term["c"] = scalarToJson(t.c);
    brackets.push_back(std::move(term));
  }
  j["brackets"] = std::move(brackets);
  if (alpha) {
    ordered_json coords = ordered_json::array();
    for (const auto& c : alpha->coords) coords.push_back(scalarToJson(c));
    j["functional"] = std::move(coords);
  }
  return j;
}

std::string emitAlgebraFile(const LieAlgebra& l,
                            const std::optional<Functional>& alpha) {
  return algebraToJson(l, alpha).dump(2) + "\n";
}

} // namespace liefrob
