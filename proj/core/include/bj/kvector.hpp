#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bj/scalar.hpp"

namespace bj {

/// Column vector in K^n. Scalars act from the right.
class KVector {
 public:
  KVector() = default;
  KVector(DivisionAlgebra k, std::size_t n) : algebra_(k), entries_(n) {}
  KVector(DivisionAlgebra k, std::vector<KScalar> entries) : algebra_(k), entries_(std::move(entries)) {}

  /// Standard basis vector e_index.
  static KVector basis(DivisionAlgebra k, std::size_t n, std::size_t index);

  DivisionAlgebra algebra() const noexcept { return algebra_; }
  std::size_t size() const noexcept { return entries_.size(); }

  KScalar& operator[](std::size_t i) { return entries_[i]; }
  const KScalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const KScalar> entries() const noexcept { return entries_; }

  /// sqrt(Re(x* x)).
  double norm() const;
  KVector normalized() const;

  /// x * s (right scalar action).
  KVector times(const KScalar& s) const;

  KVector& operator+=(const KVector& o);
  KVector& operator-=(const KVector& o);
  friend KVector operator+(KVector a, const KVector& b) { return a += b; }
  friend KVector operator-(KVector a, const KVector& b) { return a -= b; }
  friend KVector operator*(double s, KVector a);

  friend bool operator==(const KVector&, const KVector&) = default;

 private:
  DivisionAlgebra algebra_ = DivisionAlgebra::R;
  std::vector<KScalar> entries_;
};

/// x* y, a K-valued sesquilinear form (conjugate-linear in x).
KScalar inner(const KVector& x, const KVector& y);

/// Real coordinates of x under the identification K^n = R^{dn} compatible with real_embed.
std::vector<double> to_real(const KVector& x);
KVector from_real(DivisionAlgebra k, std::span<const double> coords);

}  // namespace bj
