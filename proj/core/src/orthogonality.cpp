#include "bj/orthogonality.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <vector>

#include "bj/error.hpp"
#include "bj/minimize.hpp"
#include "bj/sym_eigen.hpp"
#include "bj/tolerances.hpp"

namespace bj {

namespace {

using cplx = std::complex<double>;

constexpr int kThetaGrid = 720;

void require_same_algebra(const KMatrix& a, const KMatrix& b) {
  if (a.algebra() != b.algebra()) throw Error(ErrorCode::AlgebraMismatch, "operands belong to different algebras");
}

// U*(A* B)U for the frame U of M0(A), with A and B already normalized.
KMatrix compression(const PreparedElement& a, const KMatrix& b_unit) {
  const auto& frame = a.m0.frame;
  const std::size_t k = frame.size();
  std::vector<KVector> au, bu;
  for (const auto& u : frame) {
    au.push_back(a.unit * u);
    bu.push_back(b_unit * u);
  }
  KMatrix c(a.unit.division_algebra(), a.unit.base_field(), k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c(i, j) = inner(au[i], bu[j]);
  return c;
}

// ----------------------------------------------------------------- F = R

NumericalRangeProbe probe_real(const KMatrix& c, bool want_direction) {
  const RealMatrix rho = embed(c);
  const RealMatrix sym = 0.5 * (rho + rho.transpose());
  const SymmetricEigen eig = sym_eigen(sym);
  const double lmax = eig.values.front();
  const double lmin = eig.values.back();

  NumericalRangeProbe out;
  out.distance = std::max(lmin, -lmax);
  if (!want_direction) return out;

  const std::vector<double> ymax = eig.vectors.column(0);
  const std::vector<double> ymin = eig.vectors.column(eig.values.size() - 1);
  std::vector<double> y;
  if (lmin >= 0.0) {
    y = ymin;
  } else if (lmax <= 0.0) {
    y = ymax;
  } else {
    // y(t) = cos t ymin + sin t ymax sweeps the Rayleigh quotient from lmin to lmax.
    auto point = [&](double t) {
      std::vector<double> p(ymin.size());
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::cos(t) * ymin[i] + std::sin(t) * ymax[i];
      return p;
    };
    auto quotient = [&](const std::vector<double>& p) {
      double s = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) s += p[i] * sym(i, j) * p[j];
      return s;
    };
    double lo = 0.0, hi = std::numbers::pi / 2.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (quotient(point(mid)) <= 0.0 ? lo : hi) = mid;
    }
    y = point(0.5 * (lo + hi));
  }
  out.direction = from_real(c.division_algebra(), y).normalized();
  return out;
}

// ----------------------------------------------------------------- F = C

using CVec = std::vector<cplx>;
using CMat = std::vector<CVec>;

CMat to_complex(const KMatrix& c) {
  CMat m(c.n(), CVec(c.n()));
  for (std::size_t i = 0; i < c.n(); ++i)
    for (std::size_t j = 0; j < c.n(); ++j) m[i][j] = c(i, j).as_complex();
  return m;
}

cplx quadratic_form(const CMat& m, const CVec& x, const CVec& y) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += std::conj(x[i]) * m[i][j] * y[j];
  return s;
}

CVec normalized(CVec x) {
  double s = 0.0;
  for (const auto& e : x) s += std::norm(e);
  s = std::sqrt(s);
  for (auto& e : x) e /= s;
  return x;
}

struct BoundaryPoint {
  double theta = 0.0;
  double value = 0.0;  // lambda_min of Herm(e^{i theta} C)
  CVec x;              // unit eigenvector
  cplx point;          // x* C x, a boundary point of W(C)
};

// Herm(e^{i theta} C) = cos(theta) Herm(C) + sin(theta) Herm(iC), embedded once. Each solve starts
// from the previous eigenbasis, which is nearly right for neighbouring theta.
class ThetaPencil {
 public:
  ThetaPencil(const KMatrix& c, const CMat& cm) : cm_(cm) {
    const std::size_t k = c.n();
    KMatrix h1(DivisionAlgebra::C, BaseField::C, k), h2(DivisionAlgebra::C, BaseField::C, k);
    const cplx i1(0.0, 1.0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        h1(i, j) = KScalar(0.5 * (cm[i][j] + std::conj(cm[j][i])));
        h2(i, j) = KScalar(0.5 * (i1 * cm[i][j] + std::conj(i1 * cm[j][i])));
      }
    e1_ = embed(h1);
    e2_ = embed(h2);
    basis_ = RealMatrix::identity(e1_.rows());
  }

  BoundaryPoint at(double theta) {
    const RealMatrix h = std::cos(theta) * e1_ + std::sin(theta) * e2_;
    // Below this size a cold solve is cheaper than the two products of the warm start.
    const SymmetricEigen eig = h.rows() < 6 ? sym_eigen(h) : sym_eigen(h, basis_);
    basis_ = eig.vectors;
    BoundaryPoint bp;
    bp.theta = theta;
    bp.value = eig.values.back();
    const KVector v = from_real(DivisionAlgebra::C, eig.vectors.column(eig.values.size() - 1));
    const std::size_t k = cm_.size();
    bp.x.resize(k);
    for (std::size_t i = 0; i < k; ++i) bp.x[i] = v[i].as_complex();
    bp.x = normalized(bp.x);
    bp.point = quadratic_form(cm_, bp.x, bp.x);
    return bp;
  }

 private:
  const CMat& cm_;
  RealMatrix e1_, e2_, basis_;
};

// Unit z in span{x1, x2} with z* C z = mu, for mu on the segment [w1, w2]
// where w_i = x_i* C x_i. Rotating and shifting makes w1 < 0 < w2 real; a
// phase on x2 then makes z* C z a real quadratic in one parameter.
CVec solve_on_segment(const CMat& cm, const CVec& x1, cplx w1, const CVec& x2, cplx w2, cplx mu) {
  if (std::abs(w2 - w1) < 1e-15) return x1;
  const cplx rot = std::polar(1.0, -std::arg(w2 - w1));
  const double a1 = (rot * (w1 - mu)).real();
  const double a2 = (rot * (w2 - mu)).real();
  if (a1 >= 0.0) return x1;
  if (a2 <= 0.0) return x2;
  CMat shifted = cm;
  for (std::size_t i = 0; i < cm.size(); ++i) {
    shifted[i][i] -= mu;
    for (auto& e : shifted[i]) e *= rot;
  }
  const cplx a = quadratic_form(shifted, x1, x2);
  const cplx b = quadratic_form(shifted, x2, x1);
  const cplx g = a - std::conj(b);
  const double alpha = std::abs(g) > 0.0 ? -std::arg(g) : 0.0;
  const cplx phase = std::polar(1.0, alpha);
  const double lin = (phase * a + std::conj(phase) * b).real();
  const double s = (-lin + std::sqrt(lin * lin - 4.0 * a2 * a1)) / (2.0 * a2);
  CVec z(x1.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = x1[i] + s * phase * x2[i];
  return normalized(z);
}

CVec inverse_field_of_values_zero(const CMat& cm, std::vector<BoundaryPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) { return p.theta < q.theta; });
  for (const auto& p : pts)
    if (std::abs(p.point) <= 1e-14) return p.x;

  const std::size_t m = pts.size();
  // Crossings of the real axis by the inscribed polygon, one on each side of 0.
  std::optional<CVec> neg, pos;
  cplx neg_w, pos_w;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % m];
    const double ip = p.point.imag(), iq = q.point.imag();
    if ((ip <= 0.0 && iq > 0.0) || (ip > 0.0 && iq <= 0.0)) {
      const double t = ip / (ip - iq);
      const double r = p.point.real() + t * (q.point.real() - p.point.real());
      CVec y = solve_on_segment(cm, p.x, p.point, q.x, q.point, r);
      const cplx wy = quadratic_form(cm, y, y);
      if (r <= 0.0 && !neg) {
        neg = std::move(y);
        neg_w = wy;
      } else if (r >= 0.0 && !pos) {
        pos = std::move(y);
        pos_w = wy;
      }
    }
  }
  if (neg && pos) return solve_on_segment(cm, *neg, neg_w, *pos, pos_w, 0.0);

  // Zero is not inside the polygon: use the polygon point nearest to it.
  double best = std::numeric_limits<double>::infinity();
  CVec best_x = pts.front().x;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % m];
    const cplx e = q.point - p.point;
    const double len2 = std::norm(e);
    double t = len2 > 0.0 ? -(std::conj(e) * p.point).real() / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const cplx mu = p.point + t * e;
    if (std::abs(mu) < best) {
      best = std::abs(mu);
      best_x = solve_on_segment(cm, p.x, p.point, q.x, q.point, mu);
    }
  }
  return best_x;
}

NumericalRangeProbe probe_complex(const KMatrix& c, bool want_direction) {
  const CMat cm = to_complex(c);
  ThetaPencil pencil(c, cm);
  std::vector<BoundaryPoint> grid;
  grid.reserve(kThetaGrid + 1);
  std::size_t best = 0;
  for (int j = 0; j < kThetaGrid; ++j) {
    grid.push_back(pencil.at(2.0 * std::numbers::pi * j / kThetaGrid));
    if (grid.back().value > grid[best].value) best = grid.size() - 1;
  }
  const double step = 2.0 * std::numbers::pi / kThetaGrid;
  const double center = grid[best].theta;
  const ScalarMinimum refined = golden_section_minimize(
      [&](double t) { return -pencil.at(t).value; }, center - step, center + step, 1e-10);

  NumericalRangeProbe out;
  out.distance = std::max(grid[best].value, -refined.value);
  if (!want_direction) return out;

  BoundaryPoint top = pencil.at(refined.x);
  if (top.theta < 0.0) top.theta += 2.0 * std::numbers::pi;
  if (top.theta >= 2.0 * std::numbers::pi) top.theta -= 2.0 * std::numbers::pi;

  CVec x;
  if (out.distance > 0.0) {
    x = top.x;  // zero lies outside W(C); the supporting point is nearest
  } else {
    grid.push_back(top);
    x = inverse_field_of_values_zero(cm, std::move(grid));
  }
  KVector v(DivisionAlgebra::C, x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = KScalar(x[i]);
  out.direction = v.normalized();
  return out;
}

NumericalRangeProbe decide(const PreparedElement& a, const KMatrix& b_unit, bool want_direction) {
  return probe_numerical_range(compression(a, b_unit), a.unit.base_field(), want_direction);
}

}  // namespace

std::complex<double> field_inner(BaseField f, const KVector& x, const KVector& y) {
  const KScalar s = inner(y, x);
  if (f == BaseField::R) return s.re();
  return s.as_complex();
}

std::complex<double> evaluate_functional(const SupportFunctional& f, const KMatrix& b) {
  if (f.base_field != b.base_field()) throw Error(ErrorCode::FieldMismatch, "functional and matrix disagree on F");
  return field_inner(f.base_field, b * f.u, f.v);
}

KSubspace norm_attaining_space(const KMatrix& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroMatrix, "M0 is undefined for the zero matrix");
  return prepare(a).m0;
}

PreparedElement prepare(const KMatrix& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroMatrix, "cannot prepare the zero matrix");
  const SVDResult s = svd(a);
  PreparedElement p;
  p.norm = s.sigma.front();
  p.unit = (1.0 / p.norm) * a;
  p.m0.algebra = a.division_algebra();
  p.m0.ambient_n = a.n();
  const std::size_t k = s.top_multiplicity();
  p.m0.frame.assign(s.right_frame.begin(), s.right_frame.begin() + static_cast<std::ptrdiff_t>(k));
  return p;
}

NumericalRangeProbe probe_numerical_range(const KMatrix& c, BaseField f, bool want_direction) {
  if (f == BaseField::R) return probe_real(c, want_direction);
  if (c.division_algebra() != DivisionAlgebra::C)
    throw Error(ErrorCode::FieldMismatch, "complex numerical range needs a complex matrix");
  return probe_complex(c, want_direction);
}

bool numerical_range_contains_zero(const KMatrix& c, BaseField f) {
  return probe_numerical_range(c, f, false).distance <= tol::kOrth;
}

OrthogonalityVerdict is_bj_orthogonal(const PreparedElement& a, const KMatrix& b) {
  require_same_algebra(a.unit, b);
  OrthogonalityVerdict v;
  if (b.is_zero()) {
    v.orthogonal = true;
    v.margin = tol::kOrth;
    v.witness = a.m0.frame.front();
    return v;
  }
  const KMatrix b_unit = (1.0 / operator_norm(b)) * b;
  const NumericalRangeProbe probe = decide(a, b_unit, true);
  v.margin = tol::kOrth - probe.distance;
  v.orthogonal = v.margin >= 0.0;
  if (v.orthogonal && probe.direction) {
    KVector u(a.unit.division_algebra(), a.unit.n());
    for (std::size_t i = 0; i < a.m0.dim(); ++i) u += a.m0.frame[i].times((*probe.direction)[i]);
    v.witness = u.normalized();
  }
  return v;
}

OrthogonalityVerdict is_bj_orthogonal(const KMatrix& a, const KMatrix& b) {
  require_same_algebra(a, b);
  if (a.is_zero()) return {true, std::nullopt, tol::kOrth};
  return is_bj_orthogonal(prepare(a), b);
}

double orthogonality_defect(const PreparedElement& a, const KMatrix& b) {
  require_same_algebra(a.unit, b);
  if (b.is_zero()) return 0.0;
  const KMatrix b_unit = (1.0 / operator_norm(b)) * b;
  return std::max(0.0, decide(a, b_unit, false).distance);
}

namespace {

MinNormResult min_norm_impl(const KMatrix& a, const KMatrix& b, std::optional<double> stop_below) {
  require_same_algebra(a, b);
  if (b.is_zero()) throw Error(ErrorCode::ZeroDirection, "direction B must be nonzero");
  const double na = operator_norm(a);
  const double nb = operator_norm(b);
  const BaseField f = a.base_field();
  auto objective = [&](std::complex<double> lam) { return operator_norm(a + b.scaled(lam)); };
  const FieldMinimum m = minimize_over_field(f, objective, 2.0 * na / nb, stop_below);
  return {m.lambda, m.value, m.evaluations};
}

}  // namespace

MinNormResult bj_min_norm(const KMatrix& a, const KMatrix& b) { return min_norm_impl(a, b, std::nullopt); }

bool is_bj_orthogonal_bruteforce(const KMatrix& a, const KMatrix& b) {
  require_same_algebra(a, b);
  if (b.is_zero()) return true;
  const double na = operator_norm(a);
  const double threshold = na - tol::kBrute * std::max(1.0, na);
  return min_norm_impl(a, b, threshold).min_value >= threshold;
}

}  // namespace bj
