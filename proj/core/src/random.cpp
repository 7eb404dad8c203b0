#include "bj/random.hpp"

#include "bj/svd.hpp"

namespace bj {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

KScalar random_scalar(DivisionAlgebra k, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  KScalar s;
  s.w = normal(rng);
  if (k != DivisionAlgebra::R) s.x = normal(rng);
  if (k == DivisionAlgebra::H) {
    s.y = normal(rng);
    s.z = normal(rng);
  }
  return s;
}

KScalar random_unit_scalar(DivisionAlgebra k, Rng& rng) {
  for (;;) {
    const KScalar s = random_scalar(k, rng);
    const double a = s.abs();
    if (a > 1e-12) return s / a;
  }
}

KVector random_vector(DivisionAlgebra k, std::size_t n, Rng& rng) {
  KVector v(k, n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar(k, rng);
  return v;
}

KMatrix random_matrix(const SimpleAlgebra& a, Rng& rng) {
  KMatrix m(a);
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) m(i, j) = random_scalar(a.division_algebra, rng);
  return m;
}

KMatrix random_unitary(const SimpleAlgebra& a, Rng& rng) {
  const auto n = static_cast<std::size_t>(a.n);
  KSubspace frame{a.division_algebra, n, {}};
  while (frame.dim() < n) {
    const KVector v = random_vector(a.division_algebra, n, rng);
    extend_frame(frame, std::span<const KVector>(&v, 1));
  }
  return KMatrix::from_columns(a.base_field, frame.frame);
}

KMatrix random_with_singular_values(const SimpleAlgebra& a, const std::vector<double>& sigma, Rng& rng) {
  const KMatrix u = random_unitary(a, rng);
  const KMatrix v = random_unitary(a, rng);
  std::vector<KScalar> diag(sigma.begin(), sigma.end());
  return u * KMatrix::diagonal(a.division_algebra, a.base_field, diag) * v.adjoint();
}

}  // namespace bj
