#pragma once

#include <complex>
#include <optional>

#include "bj/kmatrix.hpp"
#include "bj/kvector.hpp"
#include "bj/svd.hpp"

namespace bj {

/// F-valued inner product <x, y>_F: Re(y* x) for F = R, y* x for F = C.
std::complex<double> field_inner(BaseField f, const KVector& x, const KVector& y);

/// The functional F_{u,v}(B) = Re(v* B u) (F = R) or v* B u (F = C).
struct SupportFunctional {
  KVector u;
  KVector v;
  BaseField base_field = BaseField::R;
};

/// Throws FieldMismatch if the functional and B disagree on the base field.
std::complex<double> evaluate_functional(const SupportFunctional& f, const KMatrix& b);

/// M0(A) = Ker(A*A - ||A||^2 I). Throws ZeroMatrix for A = 0.
KSubspace norm_attaining_space(const KMatrix& a);

/// Location of zero relative to the numerical range of a compression C.
struct NumericalRangeProbe {
  /// Signed distance-like quantity: <= 0 iff 0 lies in W(C). For F = R it is
  /// max(lambda_min, -lambda_max) of the symmetric part; for F = C it is
  /// max over theta of lambda_min(Herm(e^{i theta} C)).
  double distance = 0.0;
  /// Unit x in K^k with x* C x (Re part for F = R) as close to 0 as found.
  std::optional<KVector> direction;
};

NumericalRangeProbe probe_numerical_range(const KMatrix& c, BaseField f, bool want_direction);

/// True iff 0 lies in the numerical range of C within tol::kOrth.
bool numerical_range_contains_zero(const KMatrix& c, BaseField f);

/// A nonzero matrix scaled to unit norm together with its norm-attaining space.
/// Reused when one element is tested against many others.
struct PreparedElement {
  KMatrix unit;
  double norm = 0.0;
  KSubspace m0;
};

PreparedElement prepare(const KMatrix& a);

struct OrthogonalityVerdict {
  bool orthogonal = false;
  std::optional<KVector> witness;
  /// tol::kOrth minus the decision quantity; non-negative iff orthogonal.
  double margin = 0.0;
};

/// A is BJ orthogonal to B, decided through a unit u in M0(A) with <Au, Bu>_F = 0.
/// Throws AlgebraMismatch unless A and B share (K, F, n).
OrthogonalityVerdict is_bj_orthogonal(const KMatrix& a, const KMatrix& b);
OrthogonalityVerdict is_bj_orthogonal(const PreparedElement& a, const KMatrix& b);

/// Non-negative orthogonality defect of A against B (zero iff A is orthogonal to B).
double orthogonality_defect(const PreparedElement& a, const KMatrix& b);

struct MinNormResult {
  std::complex<double> lambda_star;
  double min_value = 0.0;
  int iterations = 0;
};

/// min over F-scalars lambda with |lambda| <= 2||A||/||B|| of ||A + lambda B||.
/// Throws ZeroDirection for B = 0.
MinNormResult bj_min_norm(const KMatrix& a, const KMatrix& b);

/// Definition-level check: B = 0 or min ||A + lambda B|| >= ||A|| - kBrute max(1, ||A||).
bool is_bj_orthogonal_bruteforce(const KMatrix& a, const KMatrix& b);

}  // namespace bj
