#pragma once

#include <cmath>
#include <complex>
#include <string_view>

namespace bj {

/// Real division algebra acting on the column space.
enum class DivisionAlgebra { R, C, H };

/// Field of scalars the algebra is considered over.
enum class BaseField { R, C };

/// Real dimension of the division algebra: 1, 2 or 4.
constexpr int real_dim(DivisionAlgebra k) noexcept {
  switch (k) {
    case DivisionAlgebra::R: return 1;
    case DivisionAlgebra::C: return 2;
    case DivisionAlgebra::H: return 4;
  }
  return 1;
}

constexpr int real_dim(BaseField f) noexcept { return f == BaseField::R ? 1 : 2; }

std::string_view to_string(DivisionAlgebra k) noexcept;
std::string_view to_string(BaseField f) noexcept;

/// Element of R, C or H stored as a quaternion w + x i + y j + z k.
///
/// Reals and complexes are the subfields with (y, z) = 0, respectively
/// (x, y, z) = 0, so one multiplication table serves all three algebras.
struct KScalar {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr KScalar() = default;
  constexpr KScalar(double re) : w(re) {}  // NOLINT(google-explicit-constructor)
  constexpr KScalar(double a, double b, double c = 0.0, double d = 0.0) : w(a), x(b), y(c), z(d) {}
  constexpr KScalar(std::complex<double> c) : w(c.real()), x(c.imag()) {}  // NOLINT

  static constexpr KScalar i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr KScalar j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr KScalar k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double re() const { return w; }
  constexpr KScalar conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double abs() const { return std::sqrt(norm2()); }
  KScalar inverse() const {
    const double n2 = norm2();
    return {w / n2, -x / n2, -y / n2, -z / n2};
  }
  std::complex<double> as_complex() const { return {w, x}; }

  constexpr KScalar& operator+=(const KScalar& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr KScalar& operator-=(const KScalar& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr KScalar& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr KScalar operator+(KScalar a, const KScalar& b) { return a += b; }
  friend constexpr KScalar operator-(KScalar a, const KScalar& b) { return a -= b; }
  friend constexpr KScalar operator-(const KScalar& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend constexpr KScalar operator*(KScalar a, double s) { return a *= s; }
  friend constexpr KScalar operator*(double s, KScalar a) { return a *= s; }
  friend constexpr KScalar operator/(KScalar a, double s) { return a *= (1.0 / s); }

  // Hamilton product; not commutative once j or k components are present.
  friend constexpr KScalar operator*(const KScalar& p, const KScalar& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
  }

  friend constexpr bool operator==(const KScalar&, const KScalar&) = default;
};

/// True if every component outside the subfield `k` is zero.
constexpr bool belongs_to(const KScalar& s, DivisionAlgebra k) {
  switch (k) {
    case DivisionAlgebra::R: return s.x == 0.0 && s.y == 0.0 && s.z == 0.0;
    case DivisionAlgebra::C: return s.y == 0.0 && s.z == 0.0;
    case DivisionAlgebra::H: return true;
  }
  return true;
}

}  // namespace bj
