#include "core/lsa.hpp"

#include <sstream>

namespace liefrob {

LsaProduct::LsaProduct(int dim, FieldKind kind) : dim(dim), fieldKind(kind) {
  a.assign(static_cast<size_t>(dim) * dim * dim, Scalar::zero(kind));
}

Vector LsaProduct::basisProduct(int i, int j) const {
  Vector v = Vector::zero(dim, fieldKind);
  for (int k = 0; k < dim; ++k) v[k] = coeff(k, i, j);
  return v;
}

Vector LsaProduct::product(const Vector& x, const Vector& y) const {
  if (x.dim() != dim || y.dim() != dim)
    throwError(ErrorCode::Argument, "LSA product dimension mismatch");
  Vector out = Vector::zero(dim, fieldKind);
  for (int i = 0; i < dim; ++i) {
    if (x[i].isZero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].isZero()) continue;
      Scalar w = x[i] * y[j];
      for (int k = 0; k < dim; ++k) {
        const Scalar& c = coeff(k, i, j);
        if (!c.isZero()) out[k] += w * c;
      }
    }
  }
  return out;
}

double LsaProduct::maxAbs() const {
  double m = 0;
  for (const auto& s : a) m = std::max(m, s.approxAbs());
  return m;
}

LsaProduct lsaFromFrobenius(const LieAlgebra& l, const FrobeniusStructure& f) {
  requireValid(l);
  int p = l.dim();
  LsaProduct prod(p, l.kind());
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      // beta_z = -omega(e_j, [e_i, e_z]); then e_i * e_j = q^{-1}(beta).
      std::vector<Scalar> beta(static_cast<size_t>(p), Scalar::zero(l.kind()));
      for (int z = 0; z < p; ++z) {
        Vector br = l.bracketBasis(i, z);
        Scalar s = Scalar::zero(l.kind());
        for (int m = 0; m < p; ++m)
          if (!br[m].isZero()) s += f.omega.at(j, m) * br[m];
        beta[static_cast<size_t>(z)] = -s;
      }
      auto col = solveLinear(f.qMatrix, beta, l.field());
      if (!col)
        throwError(ErrorCode::NotFrobenius,
                   "degenerate form while solving for the left-symmetric product");
      for (int k = 0; k < p; ++k) prod.coeff(k, i, j) = (*col)[static_cast<size_t>(k)];
    }
  }
  CheckResult rep = leftRepCheck(prod, l);
  if (!rep.ok)
    throwError(ErrorCode::Internal,
               "constructed product violates left-symmetry: " + rep.detail);
  CheckResult comm = commutatorCheck(prod, l);
  if (!comm.ok)
    throwError(ErrorCode::Internal,
               "constructed product violates the commutator identity: " +
                   comm.detail);
  return prod;
}

Matrix leftMult(const LsaProduct& p, const Vector& x) {
  if (x.dim() != p.dim)
    throwError(ErrorCode::Argument, "left multiplication dimension mismatch");
  Matrix m(p.dim, p.dim, p.fieldKind);
  for (int j = 0; j < p.dim; ++j) {
    Vector col = p.product(x, Vector::basis(p.dim, j, p.fieldKind));
    for (int k = 0; k < p.dim; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix rightMult(const LsaProduct& p, const Vector& y) {
  if (y.dim() != p.dim)
    throwError(ErrorCode::Argument, "right multiplication dimension mismatch");
  Matrix m(p.dim, p.dim, p.fieldKind);
  for (int j = 0; j < p.dim; ++j) {
    Vector col = p.product(Vector::basis(p.dim, j, p.fieldKind), y);
    for (int k = 0; k < p.dim; ++k) m.at(k, j) = col[k];
  }
  return m;
}

bool isRightUnit(const LsaProduct& p, const Vector& y, const FieldContext& ctx) {
  return rightMult(p, y).equalsWithin(Matrix::identity(p.dim, p.fieldKind), ctx);
}

bool isRightNil(const LsaProduct& p, const Vector& y, const FieldContext& ctx) {
  return rightMult(p, y).equalsWithin(Matrix(p.dim, p.dim, p.fieldKind), ctx);
}

CheckResult leftRepCheck(const LsaProduct& p, const LieAlgebra& l) {
  if (l.dim() != p.dim)
    throwError(ErrorCode::Argument, "LSA/algebra dimension mismatch");
  double scale = std::max(1.0, p.maxAbs() * p.maxAbs());
  for (int i = 0; i < p.dim; ++i) {
    Matrix li = leftMult(p, Vector::basis(p.dim, i, p.fieldKind));
    for (int j = i + 1; j < p.dim; ++j) {
      Matrix lj = leftMult(p, Vector::basis(p.dim, j, p.fieldKind));
      Matrix lbracket = leftMult(p, l.bracketBasis(i, j));
      Matrix commutator = li * lj - lj * li;
      Matrix diff = lbracket - commutator;
      for (int r = 0; r < p.dim; ++r)
        for (int c = 0; c < p.dim; ++c)
          if (!l.field().negligible(diff.at(r, c), scale)) {
            std::ostringstream os;
            os << "pair (" << l.basisLabels()[static_cast<size_t>(i)] << ", "
               << l.basisLabels()[static_cast<size_t>(j)]
               << "): L_[x,y] differs from [L_x, L_y] at entry (" << r << ", "
               << c << ")";
            return {false, os.str()};
          }
    }
  }
  return {};
}

CheckResult commutatorCheck(const LsaProduct& p, const LieAlgebra& l) {
  if (l.dim() != p.dim)
    throwError(ErrorCode::Argument, "LSA/algebra dimension mismatch");
  double scale = std::max(1.0, p.maxAbs());
  for (int i = 0; i < p.dim; ++i)
    for (int j = i + 1; j < p.dim; ++j) {
      Vector diff = p.basisProduct(i, j) - p.basisProduct(j, i) -
                    l.bracketBasis(i, j);
      for (int k = 0; k < p.dim; ++k)
        if (!l.field().negligible(diff[k], scale)) {
          std::ostringstream os;
          os << "pair (" << l.basisLabels()[static_cast<size_t>(i)] << ", "
             << l.basisLabels()[static_cast<size_t>(j)]
             << "): x*y - y*x differs from [x, y]";
          return {false, os.str()};
        }
    }
  return {};
}

} // namespace liefrob
