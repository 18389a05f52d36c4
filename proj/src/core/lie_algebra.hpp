#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/linalg.hpp"
#include "core/matrix.hpp"
#include "core/scalar.hpp"

namespace liefrob {

/// Coordinates of an element in the chosen basis e_0, ..., e_{p-1}.
struct Vector {
  std::vector<Scalar> coords;

  Vector() = default;
  explicit Vector(std::vector<Scalar> c) : coords(std::move(c)) {}
  static Vector zero(int dim, FieldKind kind);
  static Vector basis(int dim, int index, FieldKind kind);

  int dim() const { return static_cast<int>(coords.size()); }
  const Scalar& operator[](int i) const { return coords[static_cast<size_t>(i)]; }
  Scalar& operator[](int i) { return coords[static_cast<size_t>(i)]; }
  bool isZero() const;
  double maxAbs() const;
  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector scaled(const Scalar& s) const;
  bool operator==(const Vector& o) const { return coords == o.coords; }
};

/// Coordinates of a linear form in the dual basis e_0^*, ..., e_{p-1}^*.
struct Functional {
  std::vector<Scalar> coords;

  Functional() = default;
  explicit Functional(std::vector<Scalar> c) : coords(std::move(c)) {}
  static Functional zero(int dim, FieldKind kind);
  static Functional dualBasis(int dim, int index, FieldKind kind);

  int dim() const { return static_cast<int>(coords.size()); }
  const Scalar& operator[](int i) const { return coords[static_cast<size_t>(i)]; }
  Scalar& operator[](int i) { return coords[static_cast<size_t>(i)]; }
  bool isZero() const;
  /// Duality pairing <alpha, x>.
  Scalar apply(const Vector& x) const;
  bool operator==(const Functional& o) const { return coords == o.coords; }
};

/// One stored structure-constant entry: [e_i, e_j] += c * e_k, with i < j;
/// the i > j half is implied by antisymmetry.
struct BracketTerm {
  int i, j, k;
  Scalar c;
};

struct JacobiViolation {
  int i, j, k; // basis triple, 0-based
  Vector residual;
};

struct ValidationReport {
  std::vector<JacobiViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// A Lie algebra given by structure constants over a fixed basis.
/// Construction does not validate; run validate() (the analysis entry
/// points insist on it).
class LieAlgebra {
public:
  LieAlgebra(int dim, std::vector<std::string> basisLabels, FieldContext field);

  /// Requires i < j and in-range indices; accumulates onto any prior term.
  void addBracketTerm(int i, int j, int k, const Scalar& c);

  int dim() const { return dim_; }
  const FieldContext& field() const { return field_; }
  FieldKind kind() const { return field_.kind; }
  const std::vector<std::string>& basisLabels() const { return labels_; }

  /// [e_i, e_j] for any pair, antisymmetric completion included.
  Vector bracketBasis(int i, int j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of y -> [x, y].
  Matrix ad(const Vector& x) const;
  Matrix adBasis(int i) const;

  /// All stored terms in (i, j, k) order.
  std::vector<BracketTerm> terms() const;

  ValidationReport validate() const;
  bool isValid() const;

private:
  // Copyable atomic: -1 unknown, 0 invalid, 1 valid; filled lazily,
  // recomputing is idempotent so racing writers are harmless.
  struct ValidFlag {
    std::atomic<int> v{-1};
    ValidFlag() = default;
    ValidFlag(const ValidFlag& o) : v(o.v.load()) {}
    ValidFlag& operator=(const ValidFlag& o) {
      v.store(o.v.load());
      return *this;
    }
  };

  int dim_;
  std::vector<std::string> labels_;
  FieldContext field_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> table_;
  mutable ValidFlag validCache_;
};

/// Throws Validation if the algebra fails its Jacobi/antisymmetry report.
void requireValid(const LieAlgebra& l);

/// Greedy independent subset of span{[e_i, e_j]} in (i, j) order.
std::vector<Vector> derivedIdealBasis(const LieAlgebra& l);

/// Basis of the intersection of all ker(ad_x), via the stacked adjoints.
std::vector<Vector> centerBasis(const LieAlgebra& l);

/// True iff trace(ad_{e_i}) vanishes for every basis vector.
bool isUnimodular(const LieAlgebra& l);

/// Basis of the annihilator of the derived ideal, i.e. all closed 1-forms.
std::vector<Functional> closedOneFormsBasis(const LieAlgebra& l);

/// Block-diagonal sum; both summands become ideals.
LieAlgebra directSum(const LieAlgebra& a, const LieAlgebra& b);

/// Span helpers shared by several modules.
Matrix stackColumns(const std::vector<Vector>& vs, int dim, FieldKind kind);
bool inSpan(const std::vector<Vector>& span, const Vector& v,
            const FieldContext& ctx);
int spanRank(const std::vector<Vector>& vs, const FieldContext& ctx);

} // namespace liefrob
