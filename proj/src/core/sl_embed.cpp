#include "core/sl_embed.hpp"

#include <sstream>

namespace liefrob {

namespace {

SlEmbedding buildEmbedding(const LieAlgebra& l, const LsaProduct& p,
                           bool recentre) {
  requireValid(l);
  if (l.dim() != p.dim)
    throwError(ErrorCode::Argument, "LSA/algebra dimension mismatch");
  if (l.dim() < 1)
    throwError(ErrorCode::Argument,
               "embedding requires a positive-dimensional algebra");
  int dim = l.dim();
  FieldKind kind = l.kind();
  Scalar denom = scalarFromInt(dim + 1, kind);
  SlEmbedding e;
  for (int b = 0; b < dim; ++b) {
    Vector x = Vector::basis(dim, b, kind);
    Matrix lx = leftMult(p, x);
    Scalar tr = lx.trace();
    Scalar shift = recentre ? tr / denom : Scalar::zero(kind);
    Matrix img(dim + 1, dim + 1, kind);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) img.at(r, c) = lx.at(r, c);
      img.at(r, r) -= shift;
      img.at(r, dim) = x[r];
    }
    img.at(dim, dim) = recentre ? -shift : -tr;
    e.images.push_back(std::move(img));
  }
  return e;
}

} // namespace

SlEmbedding embed(const LieAlgebra& l, const LsaProduct& p) {
  return buildEmbedding(l, p, /*recentre=*/true);
}

SlEmbedding embedCornerTraceOnly(const LieAlgebra& l, const LsaProduct& p) {
  return buildEmbedding(l, p, /*recentre=*/false);
}

EmbeddingCheck verifyEmbedding(const SlEmbedding& e, const LieAlgebra& l) {
  EmbeddingCheck check;
  int dim = l.dim();
  if (e.sourceDim() != dim)
    throwError(ErrorCode::Argument, "embedding/algebra dimension mismatch");
  if (dim == 0) {
    check.detail = "empty algebra";
    return check;
  }
  int size = e.targetSize();
  double scale = 1.0;
  for (const auto& img : e.images) scale = std::max(scale, img.maxAbs());

  check.traceless = true;
  for (const auto& img : e.images)
    if (!l.field().negligible(img.trace(), scale)) check.traceless = false;

  check.homomorphism = true;
  std::ostringstream detail;
  for (int i = 0; i < dim && check.homomorphism; ++i)
    for (int j = i + 1; j < dim && check.homomorphism; ++j) {
      Matrix lhs = e.images[static_cast<size_t>(i)] * e.images[static_cast<size_t>(j)] -
                   e.images[static_cast<size_t>(j)] * e.images[static_cast<size_t>(i)];
      Vector bk = l.bracketBasis(i, j);
      Matrix rhs(size, size, l.kind());
      for (int b = 0; b < dim; ++b)
        if (!bk[b].isZero()) rhs = rhs + e.images[static_cast<size_t>(b)].scaled(bk[b]);
      if (!lhs.equalsWithin(rhs, l.field())) {
        check.homomorphism = false;
        detail << "bracket not preserved on ("
               << l.basisLabels()[static_cast<size_t>(i)] << ", "
               << l.basisLabels()[static_cast<size_t>(j)] << ")";
      }
    }

  Matrix stacked(size * size, dim, l.kind());
  for (int b = 0; b < dim; ++b)
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c)
        stacked.at(r * size + c, b) = e.images[static_cast<size_t>(b)].at(r, c);
  check.injective = rank(stacked, l.field()) == dim;

  check.detail = detail.str();
  return check;
}

} // namespace liefrob
