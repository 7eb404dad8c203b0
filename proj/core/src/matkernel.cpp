#include <cmath>
#include <string>

#include "bj/error.hpp"
#include "bj/kmatrix.hpp"
#include "bj/kvector.hpp"
#include "bj/real_matrix.hpp"
#include "bj/scalar.hpp"

namespace bj {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSymmetricInput: return "NonSymmetricInput";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::UnitaryInput: return "UnitaryInput";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NotMaximalChain: return "NotMaximalChain";
    case ErrorCode::ChainTooShort: return "ChainTooShort";
    case ErrorCode::NotSimpleFiniteDimensional: return "NotSimpleFiniteDimensional";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::DimensionOne: return "DimensionOne";
    case ErrorCode::FieldNotComplex: return "FieldNotComplex";
    case ErrorCode::BlockMismatch: return "BlockMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
  }
  return "Unknown";
}

std::string_view to_string(DivisionAlgebra k) noexcept {
  switch (k) {
    case DivisionAlgebra::R: return "R";
    case DivisionAlgebra::C: return "C";
    case DivisionAlgebra::H: return "H";
  }
  return "?";
}

std::string_view to_string(BaseField f) noexcept { return f == BaseField::R ? "R" : "C"; }

// ---------------------------------------------------------------- RealMatrix

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> RealMatrix::column(std::size_t j) const {
  std::vector<double> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double RealMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "real matrix product shape mismatch");
  RealMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const double ail = a(i, l);
      if (ail == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += ail * b(l, j);
    }
  }
  return c;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

RealMatrix operator*(double s, RealMatrix a) {
  for (double& v : a.data_) v *= s;
  return a;
}

RealMatrix gram(const RealMatrix& m) {
  const std::size_t n = m.cols();
  RealMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < m.rows(); ++r) s += m(r, i) * m(r, j);
      g(i, j) = s;
      g(j, i) = s;
    }
  }
  return g;
}

// ------------------------------------------------------------------- KVector

KVector KVector::basis(DivisionAlgebra k, std::size_t n, std::size_t index) {
  KVector e(k, n);
  e[index] = 1.0;
  return e;
}

double KVector::norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.norm2();
  return std::sqrt(s);
}

KVector KVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw Error(ErrorCode::InvalidArgument, "cannot normalize the zero vector");
  return (1.0 / nrm) * *this;
}

KVector KVector::times(const KScalar& s) const {
  KVector out(algebra_, entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[i] * s;
  return out;
}

KVector& KVector::operator+=(const KVector& o) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

KVector& KVector::operator-=(const KVector& o) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

KVector operator*(double s, KVector a) {
  for (auto& e : a.entries_) e *= s;
  return a;
}

KScalar inner(const KVector& x, const KVector& y) {
  KScalar s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i].conj() * y[i];
  return s;
}

// The first column of scalar_block(s) is the coordinate vector of conj(s);
// this makes embed(A) * to_real(x) == to_real(A x).
std::vector<double> to_real(const KVector& x) {
  const int d = real_dim(x.algebra());
  std::vector<double> r(static_cast<std::size_t>(d) * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const KScalar c = x[i].conj();
    const double comps[4] = {c.w, c.x, c.y, c.z};
    for (int t = 0; t < d; ++t) r[i * d + t] = comps[t];
  }
  return r;
}

KVector from_real(DivisionAlgebra k, std::span<const double> coords) {
  const std::size_t d = static_cast<std::size_t>(real_dim(k));
  KVector x(k, coords.size() / d);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double comps[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t t = 0; t < d; ++t) comps[t] = coords[i * d + t];
    x[i] = KScalar(comps[0], comps[1], comps[2], comps[3]).conj();
  }
  return x;
}

// ------------------------------------------------------------------- KMatrix

KMatrix::KMatrix(DivisionAlgebra k, BaseField f, std::size_t n) : algebra_(k), field_(f), n_(n), entries_(n * n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "matrix size must be positive");
  if (f == BaseField::C && k != DivisionAlgebra::C)
    throw Error(ErrorCode::InvalidArgument, "base field C requires division algebra C");
}

KMatrix::KMatrix(DivisionAlgebra k, BaseField f, std::size_t n, std::vector<KScalar> row_major) : KMatrix(k, f, n) {
  if (row_major.size() != n * n) throw Error(ErrorCode::InvalidArgument, "entry count does not match n*n");
  for (const auto& s : row_major)
    if (!belongs_to(s, k)) throw Error(ErrorCode::InvalidArgument, "entry outside the division algebra");
  entries_ = std::move(row_major);
}

KMatrix KMatrix::identity(DivisionAlgebra k, BaseField f, std::size_t n) {
  KMatrix m(k, f, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

KMatrix KMatrix::diagonal(DivisionAlgebra k, BaseField f, const std::vector<KScalar>& diag) {
  KMatrix m(k, f, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

KMatrix KMatrix::outer(BaseField f, const KVector& v, const KVector& u) {
  KMatrix m(v.algebra(), f, v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) m(i, j) = v[i] * u[j].conj();
  return m;
}

KMatrix KMatrix::from_columns(BaseField f, const std::vector<KVector>& columns) {
  if (columns.empty()) throw Error(ErrorCode::InvalidArgument, "no columns");
  KMatrix m(columns.front().algebra(), f, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != columns.size()) throw Error(ErrorCode::InvalidArgument, "matrix must be square");
    for (std::size_t i = 0; i < columns.size(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

KVector KMatrix::column(std::size_t j) const {
  KVector c(algebra_, n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

KMatrix KMatrix::adjoint() const {
  KMatrix a(algebra_, field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) a(i, j) = (*this)(j, i).conj();
  return a;
}

double KMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.norm2();
  return std::sqrt(s);
}

bool KMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e.norm2() != 0.0) return false;
  return true;
}

bool KMatrix::is_diagonal(double tol) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j).abs() > tol) return false;
  return true;
}

KMatrix KMatrix::scaled(std::complex<double> s) const {
  if (s.imag() != 0.0 && algebra_ != DivisionAlgebra::C)
    throw Error(ErrorCode::FieldMismatch, "complex scalar on a non-complex matrix");
  KMatrix out = *this;
  const KScalar q(s);
  for (auto& e : out.entries_) e = q * e;
  return out;
}

KVector KMatrix::operator*(const KVector& x) const {
  if (x.size() != n_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  KVector y(algebra_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    KScalar s;
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

void KMatrix::require_same_shape(const KMatrix& o) const {
  if (o.n_ != n_ || o.algebra_ != algebra_)
    throw Error(ErrorCode::AlgebraMismatch, "matrices belong to different algebras");
}

KMatrix& KMatrix::operator+=(const KMatrix& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

KMatrix& KMatrix::operator-=(const KMatrix& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
  a.require_same_shape(b);
  KMatrix c(a.algebra_, a.field_, a.n_);
  const std::size_t n = a.n_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const KScalar& ail = a(i, l);
      if (ail.norm2() == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += ail * b(l, j);
    }
  return c;
}

KMatrix operator*(double s, KMatrix a) {
  for (auto& e : a.entries_) e *= s;
  return a;
}

// ----------------------------------------------------------- real embedding

RealMatrix scalar_block(const KScalar& s, DivisionAlgebra k) {
  const double a = s.w, b = s.x, c = s.y, d = s.z;
  switch (k) {
    case DivisionAlgebra::R: {
      RealMatrix m(1, 1);
      m(0, 0) = a;
      return m;
    }
    case DivisionAlgebra::C: {
      // a + bi -> [[a, b], [-b, a]]
      RealMatrix m(2, 2);
      m(0, 0) = a; m(0, 1) = b;
      m(1, 0) = -b; m(1, 1) = a;
      return m;
    }
    case DivisionAlgebra::H: {
      // a + bi + cj + dk -> [[a+bi, c+di], [-c+di, a-bi]], each complex entry expanded as above.
      RealMatrix m(4, 4);
      const double rows[4][4] = {{a, b, c, d}, {-b, a, -d, c}, {-c, d, a, -b}, {-d, -c, b, a}};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j];
      return m;
    }
  }
  return {};
}

RealMatrix embed(const KMatrix& a) {
  const std::size_t d = static_cast<std::size_t>(real_dim(a.division_algebra()));
  const std::size_t n = a.n();
  RealMatrix r(d * n, d * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RealMatrix block = scalar_block(a(i, j), a.division_algebra());
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) r(i * d + p, j * d + q) = block(p, q);
    }
  return r;
}

KMatrix from_real_matrix(const RealMatrix& m) {
  KMatrix out(DivisionAlgebra::R, BaseField::R, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

KMatrix real_embed(const KMatrix& a) { return from_real_matrix(embed(a)); }

}  // namespace bj
