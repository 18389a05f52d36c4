#include "core/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace liefrob {

std::string fieldKindName(FieldKind k) {
  return k == FieldKind::Exact ? "rational" : "complex64";
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0)
    throwError(ErrorCode::Argument, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  Scalar s;
  s.v_ = std::move(q);
  return s;
}

Scalar Scalar::rational(mpq_class q) {
  if (q.get_den() == 0)
    throwError(ErrorCode::Argument, "rational with zero denominator");
  q.canonicalize();
  Scalar s;
  s.v_ = std::move(q);
  return s;
}

Scalar Scalar::rationalFromString(const std::string& text) {
  auto fail = [&]() -> void {
    throwError(ErrorCode::Parse, "invalid rational scalar '" + text + "'");
  };
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto isInteger = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!isInteger(num) || !isInteger(den)) fail();
  mpz_class n(num), d(den);
  if (d == 0) fail();
  mpq_class q(n, d);
  q.canonicalize();
  Scalar s;
  s.v_ = std::move(q);
  return s;
}

Scalar Scalar::complex(double re, double im) {
  Scalar s;
  s.v_ = std::complex<double>(re, im);
  return s;
}

Scalar Scalar::zero(FieldKind k) {
  return k == FieldKind::Exact ? Scalar() : complex(0.0);
}

Scalar Scalar::one(FieldKind k) {
  return k == FieldKind::Exact ? rational(1) : complex(1.0);
}

const mpq_class& Scalar::rat() const {
  if (!exact())
    throwError(ErrorCode::Argument, "expected rational scalar");
  return std::get<mpq_class>(v_);
}

std::complex<double> Scalar::cx() const {
  if (exact())
    throwError(ErrorCode::Argument, "expected complex scalar");
  return std::get<std::complex<double>>(v_);
}

std::complex<double> Scalar::toComplex() const {
  if (exact()) return {rat().get_d(), 0.0};
  return std::get<std::complex<double>>(v_);
}

bool Scalar::isZero() const {
  if (exact()) return rat() == 0;
  return cx() == std::complex<double>(0.0, 0.0);
}

bool Scalar::isOne() const {
  if (exact()) return rat() == 1;
  return cx() == std::complex<double>(1.0, 0.0);
}

double Scalar::approxAbs() const {
  if (exact()) return std::abs(rat().get_d());
  return std::abs(cx());
}

void Scalar::requireSameKind(const Scalar& o) const {
  if (kind() != o.kind())
    throwError(ErrorCode::Argument,
               "field variant mismatch: cannot mix rational and complex64 "
               "scalars in one computation");
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (exact())
    std::get<mpq_class>(s.v_) = -std::get<mpq_class>(s.v_);
  else
    std::get<std::complex<double>>(s.v_) = -std::get<std::complex<double>>(s.v_);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  requireSameKind(o);
  if (exact())
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  else
    std::get<std::complex<double>>(v_) += std::get<std::complex<double>>(o.v_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  requireSameKind(o);
  if (exact())
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  else
    std::get<std::complex<double>>(v_) -= std::get<std::complex<double>>(o.v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  requireSameKind(o);
  if (exact())
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  else
    std::get<std::complex<double>>(v_) *= std::get<std::complex<double>>(o.v_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  requireSameKind(o);
  if (o.isZero())
    throwError(ErrorCode::Argument, "scalar division by zero");
  if (exact())
    std::get<mpq_class>(v_) /= std::get<mpq_class>(o.v_);
  else
    std::get<std::complex<double>>(v_) /= std::get<std::complex<double>>(o.v_);
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  requireSameKind(o);
  if (exact()) return rat() == o.rat();
  return cx() == o.cx();
}

bool Scalar::lexLess(const Scalar& a, const Scalar& b) {
  a.requireSameKind(b);
  if (a.exact()) return a.rat() < b.rat();
  auto x = a.cx(), y = b.cx();
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

std::string Scalar::str() const {
  if (exact()) return rat().get_str();
  std::ostringstream os;
  os.precision(17);
  auto z = cx();
  os << z.real();
  if (z.imag() != 0.0) {
    if (z.imag() > 0) os << "+";
    os << z.imag() << "i";
  }
  return os.str();
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

FieldContext FieldContext::approx(double tol) {
  if (!(tol > 0))
    throwError(ErrorCode::Argument, "approx field requires tolerance > 0");
  return {FieldKind::Approx, tol};
}

bool FieldContext::negligible(const Scalar& s, double scale) const {
  if (kind == FieldKind::Exact) return s.isZero();
  return s.approxAbs() <= tolerance * std::max(1.0, scale);
}

bool FieldContext::equalWithin(const Scalar& a, const Scalar& b,
                               double scale) const {
  return negligible(a - b, scale);
}

} // namespace liefrob
