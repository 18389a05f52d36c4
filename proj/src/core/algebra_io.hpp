#pragma once

#include <optional>
#include <string>

#include "core/lie_algebra.hpp"

#include <json.hpp>

namespace liefrob {

/// On-disk algebra description: format version, field, basis labels,
/// sparse brackets with i < j, optional functional. Rational scalars are
/// "p/q" strings; complex64 scalars are {re, im} objects.
struct AlgebraFile {
  LieAlgebra algebra;
  std::optional<Functional> functional;
  AlgebraFile() : algebra(0, {}, FieldContext::exact()) {}
};

inline constexpr int kAlgebraFormatVersion = 1;

/// Throws Parse on malformed input (bad JSON, out-of-range indices,
/// i >= j, unparseable scalars, zero denominators).
AlgebraFile parseAlgebraFile(const std::string& text);

nlohmann::ordered_json scalarToJson(const Scalar& s);
Scalar scalarFromJson(const nlohmann::ordered_json& j, FieldKind kind);

nlohmann::ordered_json algebraToJson(const LieAlgebra& l,
                                     const std::optional<Functional>& alpha);
std::string emitAlgebraFile(const LieAlgebra& l,
                            const std::optional<Functional>& alpha);

} // namespace liefrob
