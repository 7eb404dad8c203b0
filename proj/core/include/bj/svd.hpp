#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bj/kmatrix.hpp"
#include "bj/kvector.hpp"

namespace bj {

/// Right-K-subspace of K^n given by a K-orthonormal frame.
struct KSubspace {
  DivisionAlgebra algebra = DivisionAlgebra::R;
  std::size_t ambient_n = 0;
  std::vector<KVector> frame;

  std::size_t dim() const noexcept { return frame.size(); }
  /// Orthogonal projection sum_i u_i (u_i* x).
  KVector project(const KVector& x) const;
  /// Largest deviation |u_i* u_j - delta_ij| of the frame Gram matrix.
  double orthonormality_defect() const;
};

/// K-orthonormalizes `vectors` in order, dropping those whose residual after
/// projection is below tol::kRank. Spans are taken with right K-scalars.
KSubspace gram_schmidt_k(DivisionAlgebra k, std::size_t n, std::span<const KVector> vectors);

/// Continues an existing frame with further candidates.
void extend_frame(KSubspace& space, std::span<const KVector> candidates);

struct SVDResult {
  std::vector<double> sigma;        // non-increasing
  std::vector<KVector> left_frame;  // v_i
  std::vector<KVector> right_frame; // u_i

  /// sum_i sigma_i v_i u_i*.
  KMatrix reconstruct(BaseField f) const;
  /// Number of leading singular values within tol::kCluster * sigma_1 of sigma_1.
  std::size_t top_multiplicity() const;
};

/// Singular value decomposition A = sum sigma_i v_i u_i* over K.
///
/// Routed through the eigendecomposition of embed(A)^T embed(A). Each
/// clustered real eigenspace is closed under the right K-action, so it lifts
/// to a K-subspace of the same K-dimension.
SVDResult svd(const KMatrix& a);

/// ||A|| as an operator on K^n with ||x|| = sqrt(Re(x* x)).
double operator_norm(const KMatrix& a);

/// Largest singular value of a real matrix (sqrt of top eigenvalue of M^T M).
double spectral_norm(const RealMatrix& m);

}  // namespace bj
