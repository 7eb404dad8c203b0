#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bj/kmatrix.hpp"
#include "bj/kvector.hpp"
#include "bj/scalar.hpp"

namespace bj {

using Rng = std::mt19937_64;

/// Independent seed for sub-stream `stream` of `seed` (SplitMix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Scalar of K with i.i.d. standard normal real components.
KScalar random_scalar(DivisionAlgebra k, Rng& rng);
/// Uniformly distributed unit scalar of K.
KScalar random_unit_scalar(DivisionAlgebra k, Rng& rng);
KVector random_vector(DivisionAlgebra k, std::size_t n, Rng& rng);
/// Element of M_n(K) with i.i.d. standard normal real components.
KMatrix random_matrix(const SimpleAlgebra& a, Rng& rng);
/// Haar-like unitary from Gram-Schmidt of a Gaussian matrix.
KMatrix random_unitary(const SimpleAlgebra& a, Rng& rng);
/// U diag(sigma) V* with random unitaries U, V.
KMatrix random_with_singular_values(const SimpleAlgebra& a, const std::vector<double>& sigma, Rng& rng);

}  // namespace bj
