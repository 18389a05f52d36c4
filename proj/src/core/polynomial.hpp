#pragma once

#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "core/scalar.hpp"

namespace liefrob {

struct PolyDivMod;

/// Univariate polynomial with ascending coefficients over one scalar kind.
/// Normalized: no trailing zero coefficients; the zero polynomial has none.
class Polynomial {
public:
  explicit Polynomial(FieldKind kind = FieldKind::Exact) : kind_(kind) {}
  static Polynomial zero(FieldKind kind) { return Polynomial(kind); }
  static Polynomial constant(const Scalar& c);
  static Polynomial variable(FieldKind kind); // T
  static Polynomial fromCoeffs(std::vector<Scalar> coeffs);
  /// (T - r1)(T - r2)...
  static Polynomial fromRoots(const std::vector<Scalar>& roots, FieldKind kind);

  FieldKind kind() const { return kind_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  bool isZero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const;
  Scalar leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& s) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative() const;
  Polynomial monic() const;
  Scalar eval(const Scalar& x) const;
  Matrix evalMatrix(const Matrix& a) const;
  double normL1() const;

  /// Euclidean division; divisor must be nonzero.
  PolyDivMod divmod(const Polynomial& divisor) const;
  /// Quotient when the division is exact; throws Internal otherwise.
  Polynomial exactDiv(const Polynomial& divisor) const;
  bool divides(const Polynomial& dividend) const;

  std::string str(const std::string& var = "T") const;

private:
  std::vector<Scalar> c_;
  FieldKind kind_;

  void normalize();
};

struct PolyDivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Monic gcd via the Euclidean algorithm. Exact kind only.
Polynomial polyGcd(Polynomial a, Polynomial b);

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
struct PolyExtGcd {
  Polynomial g, u, v;
};
PolyExtGcd polyExtGcd(const Polynomial& a, const Polynomial& b);

} // namespace liefrob
