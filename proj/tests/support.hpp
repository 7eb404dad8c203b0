#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bj/kmatrix.hpp"
#include "bj/random.hpp"

namespace bjtest {

using bj::BaseField;
using bj::DivisionAlgebra;
using bj::SimpleAlgebra;

inline SimpleAlgebra alg(DivisionAlgebra k, BaseField f, int n) { return {k, f, n}; }
inline SimpleAlgebra mr(int n) { return {DivisionAlgebra::R, BaseField::R, n}; }
inline SimpleAlgebra mcr(int n) { return {DivisionAlgebra::C, BaseField::R, n}; }
inline SimpleAlgebra mcc(int n) { return {DivisionAlgebra::C, BaseField::C, n}; }
inline SimpleAlgebra mh(int n) { return {DivisionAlgebra::H, BaseField::R, n}; }

/// The four (K, F) pairs at size n.
inline std::vector<SimpleAlgebra> all_at(int n) { return {mr(n), mcr(n), mh(n), mcc(n)}; }

inline std::string name(const SimpleAlgebra& a) {
  return "M" + std::to_string(a.n) + "(" + std::string(bj::to_string(a.division_algebra)) + ")/" +
         std::string(bj::to_string(a.base_field));
}

inline Eigen::MatrixXd to_eigen(const bj::RealMatrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

/// Singular values of the real embedding, computed by Eigen.
inline Eigen::VectorXd eigen_singular_values(const bj::KMatrix& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(to_eigen(bj::embed(a))).singularValues();
}

inline double eigen_norm(const bj::KMatrix& a) { return eigen_singular_values(a)(0); }

inline bj::KMatrix real_diag(std::vector<double> d, BaseField f = BaseField::R,
                             DivisionAlgebra k = DivisionAlgebra::R) {
  std::vector<bj::KScalar> s(d.begin(), d.end());
  return bj::KMatrix::diagonal(k, f, s);
}

inline double max_entry_diff(const bj::KMatrix& a, const bj::KMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, (a.entries()[i] - b.entries()[i]).abs());
  return m;
}

}  // namespace bjtest
