#pragma once

namespace bj::tol {

/// Relative gap below which two singular values are treated as equal.
inline constexpr double kCluster = 1e-8;
/// Membership of zero in a numerical range (inclusive boundary).
inline constexpr double kOrth = 1e-7;
/// Residual norm below which Gram-Schmidt drops a vector.
inline constexpr double kRank = 1e-10;
/// Jacobi stops once the off-diagonal Frobenius norm falls below kJacobi * ||S||.
inline constexpr double kJacobi = 1e-12;
/// Relative asymmetry accepted by sym_eigen.
inline constexpr double kSymmetry = 1e-12;
/// ||(I - P2) P1|| threshold for subspace inclusion.
inline constexpr double kSubspace = 1e-8;
/// Relative consistency of the scalar relating two matrices on M0.
inline constexpr double kAlpha = 1e-7;
/// Slack used when the brute-force path compares min ||A + lambda B|| with ||A||.
inline constexpr double kBrute = 1e-10;

}  // namespace bj::tol
