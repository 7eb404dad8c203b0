#pragma once

#include <vector>

#include "bj/real_matrix.hpp"

namespace bj {

struct SymmetricEigen {
  std::vector<double> values;  // descending
  RealMatrix vectors;          // column i pairs with values[i]
};

/// Cyclic Jacobi eigensolver for real symmetric matrices.
///
/// Sweeps until the off-diagonal Frobenius norm drops below tol::kJacobi * ||S||_F.
/// Throws Error(NonSymmetricInput) if |S_ij - S_ji| exceeds tol::kSymmetry * ||S||_F.
SymmetricEigen sym_eigen(const RealMatrix& s);

/// Same, starting the sweeps from start^T S start for an orthogonal `start`. Cheap when `start`
/// holds the eigenvectors of a nearby matrix.
SymmetricEigen sym_eigen(const RealMatrix& s, const RealMatrix& start);

}  // namespace bj
