#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/algebra_io.hpp"
#include "core/lie_algebra.hpp"

#include <json.hpp>

namespace liefrob {

struct AnalyzeOptions {
  std::optional<Functional> functional; // overrides any file-supplied one
  std::string functionalLabel = "user"; // report tag for the override
  std::uint64_t seed = 0;
};

/// Validation report as structured data; "kind": "validation".
nlohmann::ordered_json validationToJson(const LieAlgebra& l);

/// Full analysis report; every section is present or carries a skip
/// reason. Throws Validation when the algebra fails its axioms. A missing
/// or degenerate functional is reported, not thrown (the frobenius
/// section's status tells the caller).
nlohmann::ordered_json analyze(const LieAlgebra& l, const AnalyzeOptions& opt);

/// Embedding file content; runs verifyEmbedding first and throws
/// Verification if it fails. Uses the supplied functional, the stored one,
/// or a seeded search, in that order.
nlohmann::ordered_json embedToJson(const LieAlgebra& l,
                                   const AnalyzeOptions& opt);

/// Builds a catalog algebra from structured parameters:
///   {"name": "aff",      "n": 2}
///   {"name": "glsemi",   "n": 2, "p": 2}
///   {"name": "gkxi",     "n": 1, "k": "1", "m": [[...], ...]}
///   {"name": "gkxi",     "n": 1, "k": "1", "diag": ["0", "1"]}
///   {"name": "golden",   "n": 2}
///   {"name": "diagonal", "rates": ["1/2", ...], "field": "complex64"?}
///   {"name": "preset",   "preset": "g7b", "ktilde": "1"?}
/// Scalars follow the algebra-file conventions for the selected field.
AlgebraFile buildCatalog(const nlohmann::ordered_json& params);

/// Human-readable rendering of any report produced above; every number is
/// printed exactly as it appears in the structured form.
std::string renderText(const nlohmann::ordered_json& report);

} // namespace liefrob
