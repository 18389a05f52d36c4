#include "core/polynomial.hpp"

#include <sstream>

namespace liefrob {

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) {
  Polynomial p(c.kind());
  p.c_ = {c};
  p.normalize();
  return p;
}

Polynomial Polynomial::variable(FieldKind kind) {
  Polynomial p(kind);
  p.c_ = {Scalar::zero(kind), Scalar::one(kind)};
  return p;
}

Polynomial Polynomial::fromCoeffs(std::vector<Scalar> coeffs) {
  FieldKind kind = coeffs.empty() ? FieldKind::Exact : coeffs[0].kind();
  for (const auto& c : coeffs)
    if (c.kind() != kind)
      throwError(ErrorCode::Argument, "polynomial coefficients mix scalar kinds");
  Polynomial p(kind);
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

Polynomial Polynomial::fromRoots(const std::vector<Scalar>& roots,
                                 FieldKind kind) {
  Polynomial p = constant(Scalar::one(kind));
  for (const auto& r : roots) {
    Polynomial lin = fromCoeffs({-r, Scalar::one(kind)});
    p = p * lin;
  }
  return p;
}

Scalar Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(kind_);
  return c_[i];
}

Scalar Polynomial::leading() const {
  if (isZero())
    throwError(ErrorCode::Argument, "leading coefficient of zero polynomial");
  return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p(kind_);
  size_t n = std::max(c_.size(), o.c_.size());
  p.c_.reserve(n);
  for (size_t i = 0; i < n; ++i)
    p.c_.push_back(coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i)));
  p.normalize();
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (isZero() || o.isZero()) return zero(kind_);
  Polynomial p(kind_);
  p.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(kind_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].isZero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      p.c_[i + j] += c_[i] * o.c_[j];
  }
  p.normalize();
  return p;
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  Polynomial p(*this);
  for (auto& c : p.c_) c *= s;
  p.normalize();
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return kind_ == o.kind_ && c_ == o.c_;
}

Polynomial Polynomial::derivative() const {
  Polynomial p(kind_);
  for (size_t i = 1; i < c_.size(); ++i)
    p.c_.push_back(c_[i] * scalarFromInt(static_cast<long>(i), kind_));
  p.normalize();
  return p;
}

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  return scaled(Scalar::one(kind_) / leading());
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(kind_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Matrix Polynomial::evalMatrix(const Matrix& a) const {
  if (!a.isSquare())
    throwError(ErrorCode::Argument, "polynomial evaluation needs square matrix");
  int n = a.rows();
  Matrix acc(n, n, a.kind());
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * a;
    if (!c_[i].isZero()) {
      for (int d = 0; d < n; ++d) acc.at(d, d) += c_[i];
    }
  }
  return acc;
}

double Polynomial::normL1() const {
  double s = 0;
  for (const auto& c : c_) s += c.approxAbs();
  return s;
}

PolyDivMod Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.isZero())
    throwError(ErrorCode::Argument, "polynomial division by zero");
  if (kind_ != divisor.kind_)
    throwError(ErrorCode::Argument, "polynomial kinds mismatch in division");
  Polynomial rem(*this);
  Polynomial quo(kind_);
  int dd = divisor.degree();
  if (rem.degree() >= dd)
    quo.c_.assign(rem.degree() - dd + 1, Scalar::zero(kind_));
  Scalar lead = divisor.leading();
  while (!rem.isZero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    Scalar f = rem.leading() / lead;
    quo.c_[shift] = f;
    for (int i = 0; i <= dd; ++i)
      rem.c_[shift + i] -= f * divisor.c_[i];
    rem.normalize();
  }
  quo.normalize();
  return {quo, rem};
}

Polynomial Polynomial::exactDiv(const Polynomial& divisor) const {
  auto dm = divmod(divisor);
  if (!dm.remainder.isZero())
    throwError(ErrorCode::Internal, "polynomial division expected to be exact");
  return dm.quotient;
}

bool Polynomial::divides(const Polynomial& dividend) const {
  if (isZero()) return dividend.isZero();
  return dividend.divmod(*this).remainder.isZero();
}

std::string Polynomial::str(const std::string& var) const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Scalar c = coeff(i);
    if (c.isZero()) continue;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    bool unitCoeff = (cs == "1") && i > 0;
    if (!unitCoeff) os << cs;
    if (i > 0) {
      if (!unitCoeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Polynomial polyGcd(Polynomial a, Polynomial b) {
  if (a.kind() != FieldKind::Exact || b.kind() != FieldKind::Exact)
    throwError(ErrorCode::Unsupported, "polynomial gcd requires the exact field");
  while (!b.isZero()) {
    Polynomial r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyExtGcd polyExtGcd(const Polynomial& a, const Polynomial& b) {
  if (a.kind() != FieldKind::Exact || b.kind() != FieldKind::Exact)
    throwError(ErrorCode::Unsupported, "polynomial gcd requires the exact field");
  FieldKind k = a.kind();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(Scalar::one(k)), s1 = Polynomial::zero(k);
  Polynomial t0 = Polynomial::zero(k), t1 = Polynomial::constant(Scalar::one(k));
  while (!r1.isZero()) {
    auto dm = r0.divmod(r1);
    Polynomial r2 = dm.remainder;
    Polynomial s2 = s0 - dm.quotient * s1;
    Polynomial t2 = t0 - dm.quotient * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.isZero()) return {r0, s0, t0};
  Scalar inv = Scalar::one(k) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

} // namespace liefrob
