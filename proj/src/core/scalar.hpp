#pragma once

#include <complex>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "core/errors.hpp"

namespace liefrob {

/// The two scalar fields the library computes over.
enum class FieldKind { Exact, Approx };

std::string fieldKindName(FieldKind k);

/// A scalar over exactly one field: an arbitrary-precision rational
/// (always reduced, denominator > 0) or a double-precision complex number.
/// Arithmetic never mixes the two kinds; a mismatch throws.
class Scalar {
public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar rational(long num, long den = 1);
  static Scalar rational(mpq_class q);
  /// Parses "p", "-p" or "p/q" with q > 0 after reduction. Throws Parse.
  static Scalar rationalFromString(const std::string& text);
  static Scalar complex(double re, double im = 0.0);
  static Scalar zero(FieldKind k);
  static Scalar one(FieldKind k);

  FieldKind kind() const {
    return std::holds_alternative<mpq_class>(v_) ? FieldKind::Exact
                                                 : FieldKind::Approx;
  }
  bool exact() const { return kind() == FieldKind::Exact; }

  const mpq_class& rat() const;
  std::complex<double> cx() const;
  /// Value as a complex double, whichever the kind. Explicit conversion only.
  std::complex<double> toComplex() const;

  bool isZero() const;
  bool isOne() const;
  double approxAbs() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Orders rationals by value, complex by (re, im) lexicographically.
  static bool lexLess(const Scalar& a, const Scalar& b);

  /// Canonical text: "p/q" (or "p") for rationals, "re" / "re+imi" for complex.
  std::string str() const;

private:
  std::variant<mpq_class, std::complex<double>> v_;

  void requireSameKind(const Scalar& o) const;
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);

inline Scalar scalarFromInt(long v, FieldKind k) {
  return k == FieldKind::Exact ? Scalar::rational(v)
                               : Scalar::complex(static_cast<double>(v));
}

/// Field selection plus the zero threshold used by approximate pivoting.
/// tolerance is 0 for Exact and strictly positive for Approx.
struct FieldContext {
  FieldKind kind = FieldKind::Exact;
  double tolerance = 0.0;

  static FieldContext exact() { return {FieldKind::Exact, 0.0}; }
  static FieldContext approx(double tol = 1e-9);
  static FieldContext forKind(FieldKind k) {
    return k == FieldKind::Exact ? exact() : approx();
  }

  /// Zero test: exact for rationals, |s| <= tolerance * max(1, scale) for
  /// complex (the relative pivot rule).
  bool negligible(const Scalar& s, double scale = 1.0) const;
  bool equalWithin(const Scalar& a, const Scalar& b, double scale = 1.0) const;
  bool operator==(const FieldContext&) const = default;
};

} // namespace liefrob
