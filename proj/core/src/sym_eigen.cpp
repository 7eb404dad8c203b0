#include "bj/sym_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "bj/error.hpp"
#include "bj/tolerances.hpp"

namespace bj {

namespace {

double off_diagonal_norm(const RealMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

constexpr int kMaxSweeps = 100;

double check_symmetric(const RealMatrix& s) {
  const std::size_t n = s.rows();
  if (s.cols() != n) throw Error(ErrorCode::NonSymmetricInput, "matrix is not square");
  const double scale = s.frobenius_norm();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(s(i, j) - s(j, i)) > tol::kSymmetry * scale)
        throw Error(ErrorCode::NonSymmetricInput, "asymmetry exceeds tolerance");
  return scale;
}

void symmetrize(RealMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
}

SymmetricEigen jacobi(RealMatrix a, RealMatrix v, double scale) {
  const std::size_t n = a.rows();
  const double target = tol::kJacobi * scale;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation annihilating a(p, q); t is the smaller root of t^2 + 2 theta t - 1 = 0.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  SymmetricEigen out{std::vector<double>(n), RealMatrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

}  // namespace

SymmetricEigen sym_eigen(const RealMatrix& s) {
  const double scale = check_symmetric(s);
  RealMatrix a = s;
  symmetrize(a);
  return jacobi(std::move(a), RealMatrix::identity(s.rows()), scale);
}

SymmetricEigen sym_eigen(const RealMatrix& s, const RealMatrix& start) {
  const double scale = check_symmetric(s);
  if (start.rows() != s.rows() || start.cols() != s.rows())
    throw Error(ErrorCode::InvalidArgument, "start basis has the wrong shape");
  RealMatrix a = start.transpose() * s * start;
  symmetrize(a);
  return jacobi(std::move(a), start, scale);
}

}  // namespace bj
