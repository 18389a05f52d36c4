#include "core/lie_algebra.hpp"

#include <algorithm>

namespace liefrob {

Vector Vector::zero(int dim, FieldKind kind) {
  return Vector(std::vector<Scalar>(static_cast<size_t>(dim), Scalar::zero(kind)));
}

Vector Vector::basis(int dim, int index, FieldKind kind) {
  Vector v = zero(dim, kind);
  v[index] = Scalar::one(kind);
  return v;
}

bool Vector::isZero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Scalar& s) { return s.isZero(); });
}

double Vector::maxAbs() const {
  double m = 0;
  for (const auto& s : coords) m = std::max(m, s.approxAbs());
  return m;
}

Vector Vector::operator+(const Vector& o) const {
  if (dim() != o.dim())
    throwError(ErrorCode::Argument, "vector dimension mismatch");
  Vector v(*this);
  for (int i = 0; i < dim(); ++i) v[i] += o[i];
  return v;
}

Vector Vector::operator-(const Vector& o) const {
  if (dim() != o.dim())
    throwError(ErrorCode::Argument, "vector dimension mismatch");
  Vector v(*this);
  for (int i = 0; i < dim(); ++i) v[i] -= o[i];
  return v;
}

Vector Vector::scaled(const Scalar& s) const {
  Vector v(*this);
  for (auto& c : v.coords) c *= s;
  return v;
}

Functional Functional::zero(int dim, FieldKind kind) {
  return Functional(std::vector<Scalar>(static_cast<size_t>(dim), Scalar::zero(kind)));
}

Functional Functional::dualBasis(int dim, int index, FieldKind kind) {
  Functional f = zero(dim, kind);
  f[index] = Scalar::one(kind);
  return f;
}

bool Functional::isZero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Scalar& s) { return s.isZero(); });
}

Scalar Functional::apply(const Vector& x) const {
  if (dim() != x.dim())
    throwError(ErrorCode::Argument, "functional/vector dimension mismatch");
  FieldKind k = dim() > 0 ? coords[0].kind() : FieldKind::Exact;
  Scalar s = Scalar::zero(k);
  for (int i = 0; i < dim(); ++i) {
    if (coords[static_cast<size_t>(i)].isZero() || x[i].isZero()) continue;
    s += coords[static_cast<size_t>(i)] * x[i];
  }
  return s;
}

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basisLabels,
                       FieldContext field)
    : dim_(dim), labels_(std::move(basisLabels)), field_(field) {
  if (dim < 0)
    throwError(ErrorCode::Argument, "Lie algebra dimension must be nonnegative");
  if (labels_.empty()) {
    for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(labels_.size()) != dim)
    throwError(ErrorCode::Argument, "basis label count must equal the dimension");
}

void LieAlgebra::addBracketTerm(int i, int j, int k, const Scalar& c) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throwError(ErrorCode::Argument, "bracket term index out of range");
  if (i >= j)
    throwError(ErrorCode::Argument,
               "bracket terms are stored for i < j (antisymmetry is implied)");
  if (c.kind() != field_.kind)
    throwError(ErrorCode::Argument, "bracket coefficient kind mismatch");
  if (c.isZero()) return;
  auto& terms = table_[{i, j}];
  for (auto& [tk, tc] : terms) {
    if (tk == k) {
      tc += c;
      return;
    }
  }
  terms.push_back({k, c});
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  validCache_.v.store(-1);
}

Vector LieAlgebra::bracketBasis(int i, int j) const {
  Vector out = Vector::zero(dim_, field_.kind);
  if (i == j) return out;
  bool flip = i > j;
  auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == table_.end()) return out;
  for (const auto& [k, c] : it->second) out[k] = flip ? -c : c;
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.dim() != dim_ || y.dim() != dim_)
    throwError(ErrorCode::Argument, "bracket operand dimension mismatch");
  Vector out = Vector::zero(dim_, field_.kind);
  for (const auto& [pair, terms] : table_) {
    auto [i, j] = pair;
    // coefficient of e_i x e_j minus e_j x e_i
    Scalar w = x[i] * y[j] - x[j] * y[i];
    if (w.isZero()) continue;
    for (const auto& [k, c] : terms) out[k] += w * c;
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.dim() != dim_)
    throwError(ErrorCode::Argument, "ad operand dimension mismatch");
  Matrix m(dim_, dim_, field_.kind);
  for (int j = 0; j < dim_; ++j) {
    Vector col = bracket(x, Vector::basis(dim_, j, field_.kind));
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix LieAlgebra::adBasis(int i) const {
  return ad(Vector::basis(dim_, i, field_.kind));
}

std::vector<BracketTerm> LieAlgebra::terms() const {
  std::vector<BracketTerm> out;
  for (const auto& [pair, terms] : table_)
    for (const auto& [k, c] : terms)
      out.push_back({pair.first, pair.second, k, c});
  return out;
}

ValidationReport LieAlgebra::validate() const {
  ValidationReport report;
  double scale = 1.0;
  if (field_.kind == FieldKind::Approx) {
    for (const auto& t : terms())
      scale = std::max(scale, t.c.approxAbs());
    scale = scale * scale;
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        Vector ei = Vector::basis(dim_, i, field_.kind);
        Vector ej = Vector::basis(dim_, j, field_.kind);
        Vector ek = Vector::basis(dim_, k, field_.kind);
        Vector jac = bracket(ei, bracketBasis(j, k)) +
                     bracket(ej, bracketBasis(k, i)) +
                     bracket(ek, bracketBasis(i, j));
        bool zero = true;
        for (const auto& c : jac.coords)
          if (!field_.negligible(c, scale)) zero = false;
        if (!zero) report.violations.push_back({i, j, k, jac});
      }
  validCache_.v.store(report.valid() ? 1 : 0);
  return report;
}

bool LieAlgebra::isValid() const {
  int cached = validCache_.v.load();
  if (cached >= 0) return cached == 1;
  return validate().valid();
}

void requireValid(const LieAlgebra& l) {
  if (!l.isValid())
    throwError(ErrorCode::Validation,
               "Lie algebra fails the Jacobi identity; run validate for details");
}

Matrix stackColumns(const std::vector<Vector>& vs, int dim, FieldKind kind) {
  Matrix m(dim, static_cast<int>(vs.size()), kind);
  for (size_t c = 0; c < vs.size(); ++c)
    for (int r = 0; r < dim; ++r) m.at(r, static_cast<int>(c)) = vs[c][r];
  return m;
}

bool inSpan(const std::vector<Vector>& span, const Vector& v,
            const FieldContext& ctx) {
  if (v.isZero()) return true;
  if (span.empty()) return false;
  Matrix m = stackColumns(span, v.dim(), v.coords[0].kind());
  return solveLinear(m, v.coords, ctx).has_value();
}

int spanRank(const std::vector<Vector>& vs, const FieldContext& ctx) {
  if (vs.empty()) return 0;
  return rank(stackColumns(vs, vs[0].dim(), vs[0].coords[0].kind()), ctx);
}

std::vector<Vector> derivedIdealBasis(const LieAlgebra& l) {
  requireValid(l);
  std::vector<Vector> basis;
  for (int i = 0; i < l.dim(); ++i)
    for (int j = i + 1; j < l.dim(); ++j) {
      Vector b = l.bracketBasis(i, j);
      if (b.isZero()) continue;
      if (!inSpan(basis, b, l.field())) basis.push_back(std::move(b));
    }
  return basis;
}

std::vector<Vector> centerBasis(const LieAlgebra& l) {
  requireValid(l);
  int p = l.dim();
  if (p == 0) return {};
  Matrix stacked(p * p, p, l.kind());
  for (int i = 0; i < p; ++i) {
    Matrix adi = l.adBasis(i);
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < p; ++c) stacked.at(i * p + r, c) = adi.at(r, c);
  }
  std::vector<Vector> out;
  for (auto& v : kernelBasis(stacked, l.field())) out.push_back(Vector(std::move(v)));
  return out;
}

bool isUnimodular(const LieAlgebra& l) {
  requireValid(l);
  double scale = 1.0;
  for (int i = 0; i < l.dim(); ++i) {
    Scalar tr = l.adBasis(i).trace();
    if (!l.field().negligible(tr, scale)) return false;
  }
  return true;
}

std::vector<Functional> closedOneFormsBasis(const LieAlgebra& l) {
  auto derived = derivedIdealBasis(l);
  if (derived.empty()) {
    std::vector<Functional> all;
    for (int i = 0; i < l.dim(); ++i)
      all.push_back(Functional::dualBasis(l.dim(), i, l.kind()));
    return all;
  }
  Matrix rows(static_cast<int>(derived.size()), l.dim(), l.kind());
  for (size_t r = 0; r < derived.size(); ++r)
    for (int c = 0; c < l.dim(); ++c)
      rows.at(static_cast<int>(r), c) = derived[r][c];
  std::vector<Functional> out;
  for (auto& v : kernelBasis(rows, l.field()))
    out.push_back(Functional(std::move(v)));
  return out;
}

LieAlgebra directSum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.kind() != b.kind())
    throwError(ErrorCode::Argument, "direct sum requires matching fields");
  FieldContext field = a.field();
  field.tolerance = std::max(a.field().tolerance, b.field().tolerance);
  std::vector<std::string> labels = a.basisLabels();
  labels.insert(labels.end(), b.basisLabels().begin(), b.basisLabels().end());
  LieAlgebra sum(a.dim() + b.dim(), std::move(labels), field);
  for (const auto& t : a.terms()) sum.addBracketTerm(t.i, t.j, t.k, t.c);
  int off = a.dim();
  for (const auto& t : b.terms())
    sum.addBracketTerm(t.i + off, t.j + off, t.k + off, t.c);
  return sum;
}

} // namespace liefrob
