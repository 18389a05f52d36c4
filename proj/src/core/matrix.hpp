#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "core/scalar.hpp"

namespace liefrob {

/// Dense row-major matrix with kind-homogeneous Scalar entries.
class Matrix {
public:
  Matrix(int rows, int cols, FieldKind kind);
  static Matrix identity(int n, FieldKind kind);
  /// Builds from nested rows; checks rectangular shape and kind homogeneity.
  static Matrix fromRows(const std::vector<std::vector<Scalar>>& rows);
  /// Convenience for tests: integer entries over the exact field.
  static Matrix fromInts(std::initializer_list<std::initializer_list<long>> rows);
  static Matrix diagonal(const std::vector<Scalar>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldKind kind() const { return kind_; }
  bool isSquare() const { return rows_ == cols_; }

  const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<Scalar> row(int r) const;
  std::vector<Scalar> col(int c) const;
  void swapRows(int a, int b);

  Matrix transpose() const;
  Scalar trace() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  Matrix pow(int e) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool isZero() const;
  /// Max |entry| as a double; the scale used by tolerance comparisons.
  double maxAbs() const;

  /// Entrywise comparison under the context's zero test.
  bool equalsWithin(const Matrix& o, const FieldContext& ctx) const;

  std::string str() const;

private:
  int rows_, cols_;
  FieldKind kind_;
  std::vector<Scalar> e_;
};

/// x -> A*x.
std::vector<Scalar> matVec(const Matrix& a, const std::vector<Scalar>& x);

} // namespace liefrob
