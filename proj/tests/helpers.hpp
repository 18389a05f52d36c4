#pragma once

#include <random>
#include <vector>

#include "core/lie_algebra.hpp"
#include "core/matrix.hpp"
#include "core/polynomial.hpp"

namespace testutil {

using namespace liefrob;

inline Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }

inline Polynomial polyInts(std::initializer_list<long> ascending) {
  std::vector<Scalar> c;
  for (long v : ascending) c.push_back(q(v));
  return Polynomial::fromCoeffs(std::move(c));
}

inline Vector vecInts(std::initializer_list<long> entries) {
  std::vector<Scalar> c;
  for (long v : entries) c.push_back(q(v));
  return Vector(std::move(c));
}

inline Functional funInts(std::initializer_list<long> entries) {
  std::vector<Scalar> c;
  for (long v : entries) c.push_back(q(v));
  return Functional(std::move(c));
}

/// Deterministic random rational matrix with entries num/den,
/// num in [-bound, bound], den in [1, denBound].
inline Matrix randomRationalMatrix(int rows, int cols, std::mt19937_64& rng,
                                   long bound = 5, long denBound = 3) {
  Matrix m(rows, cols, FieldKind::Exact);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      long num = static_cast<long>(rng() % (2 * bound + 1)) - bound;
      long den = 1 + static_cast<long>(rng() % denBound);
      m.at(r, c) = Scalar::rational(num, den);
    }
  return m;
}

} // namespace testutil
