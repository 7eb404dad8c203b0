#include "bj/svd.hpp"

#include <algorithm>
#include <cmath>

#include "bj/error.hpp"
#include "bj/sym_eigen.hpp"
#include "bj/tolerances.hpp"

namespace bj {

KVector KSubspace::project(const KVector& x) const {
  KVector p(algebra, ambient_n);
  for (const auto& u : frame) p += u.times(inner(u, x));
  return p;
}

double KSubspace::orthonormality_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = 0; j < frame.size(); ++j) {
      const KScalar g = inner(frame[i], frame[j]) - KScalar(i == j ? 1.0 : 0.0);
      worst = std::max(worst, g.abs());
    }
  return worst;
}

void extend_frame(KSubspace& space, std::span<const KVector> candidates) {
  for (const auto& c : candidates) {
    if (space.frame.size() == space.ambient_n) return;
    KVector w = c;
    // Two passes of modified Gram-Schmidt keep the frame orthonormal to rounding.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : space.frame) w -= u.times(inner(u, w));
    const double r = w.norm();
    if (r < tol::kRank) continue;
    space.frame.push_back((1.0 / r) * w);
  }
}

KSubspace gram_schmidt_k(DivisionAlgebra k, std::size_t n, std::span<const KVector> vectors) {
  KSubspace s{k, n, {}};
  extend_frame(s, vectors);
  return s;
}

KMatrix SVDResult::reconstruct(BaseField f) const {
  const auto k = right_frame.front().algebra();
  const std::size_t n = right_frame.size();
  KMatrix a(k, f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] == 0.0) continue;
    a += sigma[i] * KMatrix::outer(f, left_frame[i], right_frame[i]);
  }
  return a;
}

std::size_t SVDResult::top_multiplicity() const {
  std::size_t m = 0;
  while (m < sigma.size() && sigma.front() - sigma[m] <= tol::kCluster * sigma.front()) ++m;
  return std::max<std::size_t>(m, 1);
}

SVDResult svd(const KMatrix& a) {
  const DivisionAlgebra k = a.division_algebra();
  const std::size_t n = a.n();
  const SymmetricEigen eig = sym_eigen(gram(embed(a)));

  // Group eigenvalues of A*A into clusters; each cluster spans a K-invariant subspace.
  const double top = std::max(eig.values.front(), 0.0);
  KSubspace right{k, n, {}};
  std::size_t start = 0;
  while (start < eig.values.size()) {
    std::size_t end = start + 1;
    while (end < eig.values.size() && eig.values[end - 1] - eig.values[end] <= tol::kCluster * top) ++end;
    std::vector<KVector> lifted;
    lifted.reserve(end - start);
    for (std::size_t c = start; c < end; ++c) lifted.push_back(from_real(k, eig.vectors.column(c)));
    extend_frame(right, lifted);
    start = end;
  }
  if (right.frame.size() != n) {
    // Rounding lost a direction; fill from the standard basis.
    std::vector<KVector> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(KVector::basis(k, n, i));
    extend_frame(right, basis);
  }

  SVDResult out;
  out.right_frame = std::move(right.frame);
  out.sigma.resize(n);
  std::vector<KVector> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = a * out.right_frame[i];
    out.sigma[i] = images[i].norm();
  }
  // Rounding inside a cluster can perturb the order slightly.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return out.sigma[x] > out.sigma[y]; });
  {
    std::vector<KVector> r(n), im(n);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = out.right_frame[order[i]];
      im[i] = images[order[i]];
      s[i] = out.sigma[order[i]];
    }
    out.right_frame = std::move(r);
    images = std::move(im);
    out.sigma = std::move(s);
  }

  const double s1 = out.sigma.front();
  const double zero_cut = 1e-12 * s1;
  KSubspace left{k, n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (s1 == 0.0 || out.sigma[i] <= zero_cut) {
      std::fill(out.sigma.begin() + static_cast<std::ptrdiff_t>(i), out.sigma.end(), 0.0);
      break;
    }
    const KVector v = (1.0 / out.sigma[i]) * images[i];
    extend_frame(left, std::span<const KVector>(&v, 1));
    if (left.frame.size() != i + 1) {
      std::fill(out.sigma.begin() + static_cast<std::ptrdiff_t>(i), out.sigma.end(), 0.0);
      break;
    }
  }
  // Nonzero singular values come first, so the kernel tail is completed in index order.
  std::vector<KVector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(KVector::basis(k, n, i));
  extend_frame(left, basis);
  out.left_frame = std::move(left.frame);
  return out;
}

double spectral_norm(const RealMatrix& m) {
  const SymmetricEigen eig = sym_eigen(gram(m));
  return std::sqrt(std::max(eig.values.front(), 0.0));
}

double operator_norm(const KMatrix& a) {
  if (a.is_zero()) return 0.0;
  return spectral_norm(embed(a));
}

}  // namespace bj
