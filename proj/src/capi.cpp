#include "liefrob.h"

#include <cstring>
#include <optional>
#include <string>

#include "core/analysis.hpp"
#include "core/catalog.hpp"
#include "core/errors.hpp"

using namespace liefrob;

struct lf_algebra {
  AlgebraFile file;
};

namespace {

thread_local std::string g_lastError;

lf_status statusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return LF_ERR_PARSE;
    case ErrorCode::Validation: return LF_ERR_VALIDATION;
    case ErrorCode::Verification: return LF_ERR_VERIFICATION;
    case ErrorCode::NotFrobenius: return LF_ERR_NOT_FROBENIUS;
    case ErrorCode::Argument: return LF_ERR_ARGUMENT;
    case ErrorCode::Unsupported: return LF_ERR_UNSUPPORTED;
    case ErrorCode::Internal: return LF_ERR_INTERNAL;
  }
  return LF_ERR_INTERNAL;
}

char* copyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
lf_status guarded(Fn&& fn) {
  try {
    g_lastError.clear();
    return fn();
  } catch (const Error& e) {
    g_lastError = e.what();
    return statusOf(e.code());
  } catch (const std::exception& e) {
    g_lastError = e.what();
    return LF_ERR_INTERNAL;
  } catch (...) {
    g_lastError = "unknown error";
    return LF_ERR_INTERNAL;
  }
}

std::optional<Functional> parseFunctionalCsv(const char* csv, int dim,
                                             FieldKind kind) {
  if (!csv) return std::nullopt;
  std::string text(csv);
  std::vector<Scalar> coords;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string token = comma == std::string::npos
                            ? text.substr(start)
                            : text.substr(start, comma - start);
    if (kind == FieldKind::Exact) {
      coords.push_back(Scalar::rationalFromString(token));
    } else {
      size_t colon = token.find(':');
      try {
        if (colon == std::string::npos)
          coords.push_back(Scalar::complex(std::stod(token)));
        else
          coords.push_back(Scalar::complex(std::stod(token.substr(0, colon)),
                                           std::stod(token.substr(colon + 1))));
      } catch (const std::exception&) {
        throwError(ErrorCode::Parse, "invalid complex coordinate '" + token + "'");
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(coords.size()) != dim)
    throwError(ErrorCode::Argument,
               "functional has " + std::to_string(coords.size()) +
                   " coordinates, algebra has dimension " + std::to_string(dim));
  return Functional(std::move(coords));
}

} // namespace

extern "C" {

lf_status lf_algebra_parse(const char* json_text, lf_algebra** out) {
  return guarded([&]() {
    if (!json_text || !out)
      throwError(ErrorCode::Argument, "null argument");
    auto handle = new lf_algebra{parseAlgebraFile(json_text)};
    *out = handle;
    return LF_OK;
  });
}

lf_status lf_algebra_catalog(const char* params_json, lf_algebra** out) {
  return guarded([&]() {
    if (!params_json || !out)
      throwError(ErrorCode::Argument, "null argument");
    nlohmann::ordered_json params;
    try {
      params = nlohmann::ordered_json::parse(params_json);
    } catch (const nlohmann::json::exception& e) {
      throwError(ErrorCode::Parse, std::string("invalid catalog JSON: ") + e.what());
    }
    *out = new lf_algebra{buildCatalog(params)};
    return LF_OK;
  });
}

lf_status lf_algebra_preset(const char* name, const char* ktilde,
                            lf_algebra** out) {
  return guarded([&]() {
    if (!name || !out)
      throwError(ErrorCode::Argument, "null argument");
    nlohmann::ordered_json params;
    params["name"] = "preset";
    params["preset"] = name;
    if (ktilde) params["ktilde"] = std::string(ktilde);
    *out = new lf_algebra{buildCatalog(params)};
    return LF_OK;
  });
}

void lf_algebra_free(lf_algebra* algebra) { delete algebra; }

lf_status lf_algebra_emit(const lf_algebra* algebra, char** json_out) {
  return guarded([&]() {
    if (!algebra || !json_out)
      throwError(ErrorCode::Argument, "null argument");
    *json_out = copyString(
        emitAlgebraFile(algebra->file.algebra, algebra->file.functional));
    return LF_OK;
  });
}

lf_status lf_algebra_validate(const lf_algebra* algebra,
                              char** report_json_out) {
  return guarded([&]() {
    if (!algebra || !report_json_out)
      throwError(ErrorCode::Argument, "null argument");
    auto report = validationToJson(algebra->file.algebra);
    *report_json_out = copyString(report.dump(2) + "\n");
    if (!report["valid"].get<bool>()) {
      g_lastError = "algebra fails the Jacobi identity";
      return LF_ERR_VALIDATION;
    }
    return LF_OK;
  });
}

lf_status lf_algebra_analyze(const lf_algebra* algebra,
                             const char* functional_csv, uint64_t seed,
                             char** report_json_out) {
  return guarded([&]() {
    if (!algebra || !report_json_out)
      throwError(ErrorCode::Argument, "null argument");
    AnalyzeOptions opt;
    opt.seed = seed;
    opt.functional = parseFunctionalCsv(functional_csv,
                                        algebra->file.algebra.dim(),
                                        algebra->file.algebra.kind());
    if (!opt.functional && algebra->file.functional) {
      opt.functional = algebra->file.functional;
      opt.functionalLabel = "file";
    }
    auto report = analyze(algebra->file.algebra, opt);
    *report_json_out = copyString(report.dump(2) + "\n");
    if (report["frobenius"]["status"].get<std::string>() != "ok") {
      g_lastError = "no Frobenius functional: " +
                    report["frobenius"]["status"].get<std::string>();
      return LF_ERR_NOT_FROBENIUS;
    }
    return LF_OK;
  });
}

lf_status lf_algebra_embed(const lf_algebra* algebra,
                           const char* functional_csv, uint64_t seed,
                           char** json_out) {
  return guarded([&]() {
    if (!algebra || !json_out)
      throwError(ErrorCode::Argument, "null argument");
    AnalyzeOptions opt;
    opt.seed = seed;
    opt.functional = parseFunctionalCsv(functional_csv,
                                        algebra->file.algebra.dim(),
                                        algebra->file.algebra.kind());
    if (!opt.functional) opt.functional = algebra->file.functional;
    *json_out =
        copyString(embedToJson(algebra->file.algebra, opt).dump(2) + "\n");
    return LF_OK;
  });
}

lf_status lf_render_text(const char* report_json, char** text_out) {
  return guarded([&]() {
    if (!report_json || !text_out)
      throwError(ErrorCode::Argument, "null argument");
    nlohmann::ordered_json report;
    try {
      report = nlohmann::ordered_json::parse(report_json);
    } catch (const nlohmann::json::exception& e) {
      throwError(ErrorCode::Parse, std::string("invalid report JSON: ") + e.what());
    }
    *text_out = copyString(renderText(report));
    return LF_OK;
  });
}

void lf_string_free(char* s) { delete[] s; }

const char* lf_last_error(void) { return g_lastError.c_str(); }

const char* lf_version(void) { return "0.1.0"; }

} // extern "C"
