#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "bj/kvector.hpp"
#include "bj/real_matrix.hpp"
#include "bj/scalar.hpp"

namespace bj {

/// Signature of a simple algebra M_n(K) over F.
struct SimpleAlgebra {
  DivisionAlgebra division_algebra = DivisionAlgebra::R;
  BaseField base_field = BaseField::R;
  int n = 1;

  /// Dimension as a vector space over the base field.
  int dimension() const { return n * n * real_dim(division_algebra) / real_dim(base_field); }

  friend bool operator==(const SimpleAlgebra&, const SimpleAlgebra&) = default;
};

/// Dense n x n matrix over K, considered as an element of M_n(K) over F.
class KMatrix {
 public:
  KMatrix() = default;
  /// Zero matrix. Throws InvalidArgument for F = C with K != C or n < 1.
  KMatrix(DivisionAlgebra k, BaseField f, std::size_t n);
  KMatrix(DivisionAlgebra k, BaseField f, std::size_t n, std::vector<KScalar> row_major);
  explicit KMatrix(const SimpleAlgebra& a) : KMatrix(a.division_algebra, a.base_field, a.n) {}

  static KMatrix identity(DivisionAlgebra k, BaseField f, std::size_t n);
  static KMatrix identity(const SimpleAlgebra& a) { return identity(a.division_algebra, a.base_field, a.n); }
  static KMatrix diagonal(DivisionAlgebra k, BaseField f, const std::vector<KScalar>& diag);
  /// v u*.
  static KMatrix outer(BaseField f, const KVector& v, const KVector& u);
  /// Matrix whose j-th column is columns[j].
  static KMatrix from_columns(BaseField f, const std::vector<KVector>& columns);

  DivisionAlgebra division_algebra() const noexcept { return algebra_; }
  BaseField base_field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  SimpleAlgebra algebra() const { return {algebra_, field_, static_cast<int>(n_)}; }

  KScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const KScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<KScalar>& entries() const noexcept { return entries_; }

  KVector column(std::size_t j) const;
  KMatrix adjoint() const;
  double frobenius_norm() const;
  bool is_zero() const;
  bool is_diagonal(double tol) const;

  /// s A for an F-scalar s (left multiplication by a central scalar).
  KMatrix scaled(std::complex<double> s) const;

  KVector operator*(const KVector& x) const;
  KMatrix& operator+=(const KMatrix& o);
  KMatrix& operator-=(const KMatrix& o);
  friend KMatrix operator+(KMatrix a, const KMatrix& b) { return a += b; }
  friend KMatrix operator-(KMatrix a, const KMatrix& b) { return a -= b; }
  friend KMatrix operator*(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator*(double s, KMatrix a);

  friend bool operator==(const KMatrix&, const KMatrix&) = default;

 private:
  void require_same_shape(const KMatrix& o) const;

  DivisionAlgebra algebra_ = DivisionAlgebra::R;
  BaseField field_ = BaseField::R;
  std::size_t n_ = 0;
  std::vector<KScalar> entries_;
};

/// Real d x d block representing a scalar of K (d = real_dim(K)).
RealMatrix scalar_block(const KScalar& s, DivisionAlgebra k);

/// The *-homomorphism M_n(K) -> M_{dn}(R) built from scalar_block.
RealMatrix embed(const KMatrix& a);

/// real_embed as an element of M_{dn}(R) over R (identity map when K = R).
KMatrix real_embed(const KMatrix& a);

KMatrix from_real_matrix(const RealMatrix& m);

}  // namespace bj
