#include "core/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace liefrob {

Matrix::Matrix(int rows, int cols, FieldKind kind)
    : rows_(rows), cols_(cols), kind_(kind) {
  if (rows < 0 || cols < 0)
    throwError(ErrorCode::Argument, "matrix dimensions must be nonnegative");
  e_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(kind));
}

Matrix Matrix::identity(int n, FieldKind kind) {
  Matrix m(n, n, kind);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(kind);
  return m;
}

Matrix Matrix::fromRows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return Matrix(0, 0, FieldKind::Exact);
  int r = static_cast<int>(rows.size());
  int c = static_cast<int>(rows[0].size());
  FieldKind kind = c > 0 ? rows[0][0].kind() : FieldKind::Exact;
  Matrix m(r, c, kind);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throwError(ErrorCode::Argument, "ragged matrix rows");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j].kind() != kind)
        throwError(ErrorCode::Argument, "matrix entries mix scalar kinds");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::fromInts(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Scalar>> conv;
  for (const auto& row : rows) {
    std::vector<Scalar> r;
    for (long v : row) r.push_back(Scalar::rational(v));
    conv.push_back(std::move(r));
  }
  return fromRows(conv);
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
  int n = static_cast<int>(entries.size());
  FieldKind kind = n > 0 ? entries[0].kind() : FieldKind::Exact;
  Matrix m(n, n, kind);
  for (int i = 0; i < n; ++i) {
    if (entries[i].kind() != kind)
      throwError(ErrorCode::Argument, "diagonal entries mix scalar kinds");
    m.at(i, i) = entries[i];
  }
  return m;
}

std::vector<Scalar> Matrix::row(int r) const {
  std::vector<Scalar> out;
  out.reserve(cols_);
  for (int j = 0; j < cols_; ++j) out.push_back(at(r, j));
  return out;
}

std::vector<Scalar> Matrix::col(int c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(at(i, c));
  return out;
}

void Matrix::swapRows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, kind_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Scalar Matrix::trace() const {
  if (!isSquare())
    throwError(ErrorCode::Argument, "trace of non-square matrix");
  Scalar s = Scalar::zero(kind_);
  for (int i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throwError(ErrorCode::Argument, "matrix shape mismatch in addition");
  Matrix m(*this);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throwError(ErrorCode::Argument, "matrix shape mismatch in subtraction");
  Matrix m(*this);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throwError(ErrorCode::Argument, "matrix shape mismatch in product");
  Matrix m(rows_, o.cols_, kind_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.isZero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (bkj.isZero()) continue;
        m.at(i, j) += aik * bkj;
      }
    }
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& x : m.e_) x = -x;
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(*this);
  for (auto& x : m.e_) x *= s;
  return m;
}

Matrix Matrix::pow(int e) const {
  if (!isSquare())
    throwError(ErrorCode::Argument, "power of non-square matrix");
  if (e < 0) throwError(ErrorCode::Argument, "negative matrix power");
  Matrix acc = identity(rows_, kind_);
  Matrix base(*this);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || kind_ != o.kind_) return false;
  return e_ == o.e_;
}

bool Matrix::isZero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Scalar& s) { return s.isZero(); });
}

double Matrix::maxAbs() const {
  double m = 0.0;
  for (const auto& x : e_) m = std::max(m, x.approxAbs());
  return m;
}

bool Matrix::equalsWithin(const Matrix& o, const FieldContext& ctx) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  double scale = std::max(maxAbs(), o.maxAbs());
  for (size_t i = 0; i < e_.size(); ++i)
    if (!ctx.equalWithin(e_[i], o.e_[i], scale)) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

std::vector<Scalar> matVec(const Matrix& a, const std::vector<Scalar>& x) {
  if (static_cast<int>(x.size()) != a.cols())
    throwError(ErrorCode::Argument, "matrix-vector shape mismatch");
  std::vector<Scalar> out(a.rows(), Scalar::zero(a.kind()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).isZero() || x[j].isZero()) continue;
      out[i] += a.at(i, j) * x[j];
    }
  return out;
}

} // namespace liefrob
