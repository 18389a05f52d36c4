#pragma once

#include <vector>

#include "core/lie_algebra.hpp"
#include "core/lsa.hpp"

namespace liefrob {

/// Images of the basis vectors under the traceless affine representation:
/// one (p+1) x (p+1) matrix per basis vector.
struct SlEmbedding {
  std::vector<Matrix> images;
  int sourceDim() const { return static_cast<int>(images.size()); }
  int targetSize() const { return sourceDim() + 1; }
};

/// phi(x) = [[L_x - (tr L_x / (p+1)) I, x], [0, -tr L_x / (p+1)]].
/// Recentring the linear block is what keeps the map a homomorphism when
/// tr L_x != 0; compare embedCornerTraceOnly. Requires p >= 1.
SlEmbedding embed(const LieAlgebra& l, const LsaProduct& p);

/// The variant [[L_x, x], [0, -tr L_x]] that places the whole trace in the
/// corner. Traceless but generally not bracket-preserving; kept as the
/// regression target that pins the recentred form above.
SlEmbedding embedCornerTraceOnly(const LieAlgebra& l, const LsaProduct& p);

struct EmbeddingCheck {
  bool traceless = false;
  bool homomorphism = false;
  bool injective = false;
  std::string detail;
  bool ok() const { return traceless && homomorphism && injective; }
};

/// Traceless images, bracket preservation on all pairs, and injectivity
/// (stacked images have rank p).
EmbeddingCheck verifyEmbedding(const SlEmbedding& e, const LieAlgebra& l);

} // namespace liefrob
