#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bj {

/// Dense row-major real matrix; the working type of the spectral kernel.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> data() const noexcept { return data_; }

  std::vector<double> column(std::size_t j) const;
  RealMatrix transpose() const;
  double frobenius_norm() const;

  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator*(double s, RealMatrix a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// M^T M, symmetrized exactly.
RealMatrix gram(const RealMatrix& m);

}  // namespace bj
