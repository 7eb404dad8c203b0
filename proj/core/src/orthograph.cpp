#include "bj/orthograph.hpp"

#include <algorithm>
#include <cmath>

#include "bj/error.hpp"
#include "bj/random.hpp"
#include "bj/svd.hpp"
#include "bj/tolerances.hpp"

namespace bj {

namespace {

KMatrix partial_sum(BaseField f, const std::vector<KVector>& left, const std::vector<KVector>& right, std::size_t count) {
  KMatrix m(right.front().algebra(), f, right.size());
  for (std::size_t i = 0; i < count; ++i) m += KMatrix::outer(f, left[i], right[i]);
  return m;
}

bool is_scalar_unitary(const SVDResult& s) { return s.sigma.front() - s.sigma.back() <= tol::kCluster * s.sigma.front(); }

void require_nonzero(const KMatrix& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroMatrix, "operation needs a nonzero matrix");
}

// Standard basis vector e_index with real entries.
KVector e(DivisionAlgebra k, std::size_t n, std::size_t index) { return KVector::basis(k, n, index); }

}  // namespace

bool outgoing_subset(const PreparedElement& a1, const PreparedElement& a2) {
  const BaseField f = a1.unit.base_field();
  const auto& frame1 = a1.m0.frame;
  const std::size_t k1 = frame1.size();

  // ||(I - P2) P1|| through the Gram matrix of the residuals of the frame of M0(A1).
  std::vector<KVector> residual;
  residual.reserve(k1);
  for (const auto& u : frame1) residual.push_back(u - a2.m0.project(u));
  KMatrix g(a1.unit.division_algebra(), BaseField::R, k1);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j) g(i, j) = inner(residual[i], residual[j]);
  if (std::sqrt(operator_norm(g)) >= tol::kSubspace) return false;

  const KVector x1 = a1.unit * frame1.front();
  const KVector x2 = a2.unit * frame1.front();
  const double n2 = x2.norm();
  if (n2 == 0.0) return false;
  const std::complex<double> alpha = field_inner(f, x1, x2) / (n2 * n2);
  if (std::abs(alpha) < 1e-12) return false;
  const KScalar alpha_k(alpha);
  for (const auto& u : frame1) {
    const KVector lhs = a1.unit * u;
    const KVector rhs = (a2.unit * u).times(alpha_k);
    if ((lhs - rhs).norm() > tol::kAlpha * lhs.norm()) return false;
  }
  return true;
}

bool outgoing_subset(const KMatrix& a1, const KMatrix& a2) {
  require_nonzero(a1);
  require_nonzero(a2);
  if (a1.algebra() != a2.algebra()) throw Error(ErrorCode::AlgebraMismatch, "operands belong to different algebras");
  return outgoing_subset(prepare(a1), prepare(a2));
}

bool outgoing_equal(const PreparedElement& a1, const PreparedElement& a2) {
  return outgoing_subset(a1, a2) && outgoing_subset(a2, a1);
}

bool outgoing_equal(const KMatrix& a1, const KMatrix& a2) {
  require_nonzero(a1);
  require_nonzero(a2);
  if (a1.algebra() != a2.algebra()) throw Error(ErrorCode::AlgebraMismatch, "operands belong to different algebras");
  return outgoing_equal(prepare(a1), prepare(a2));
}

std::optional<KMatrix> refine(const KMatrix& a) {
  require_nonzero(a);
  const SVDResult s = svd(a);
  if (is_scalar_unitary(s)) return std::nullopt;
  const std::size_t k = s.top_multiplicity();
  return partial_sum(a.base_field(), s.left_frame, s.right_frame, k + 1);
}

KMatrix strictness_witness(const KMatrix& lower, const KMatrix& upper) {
  (void)upper;
  const PreparedElement p = prepare(lower);
  KMatrix proj(lower.division_algebra(), lower.base_field(), lower.n());
  for (const auto& u : p.m0.frame) proj += KMatrix::outer(lower.base_field(), u, u);
  return lower * proj;
}

Chain build_maximal_chain(const KMatrix& a) {
  require_nonzero(a);
  const SVDResult s = svd(a);
  const std::size_t k = s.top_multiplicity();
  const BaseField f = a.base_field();

  std::vector<KMatrix> candidates;
  for (std::size_t i = 1; i < k; ++i) candidates.push_back(partial_sum(f, s.left_frame, s.right_frame, i));
  candidates.push_back(a);
  for (auto next = refine(a); next; next = refine(*next)) candidates.push_back(*next);

  Chain c;
  std::optional<PreparedElement> last;
  for (auto& m : candidates) {
    PreparedElement p = prepare(m);
    if (last && outgoing_equal(*last, p)) continue;
    c.elements.push_back(std::move(m));
    last = std::move(p);
  }
  for (std::size_t i = 0; i + 1 < c.elements.size(); ++i)
    c.strictness_witnesses.push_back(strictness_witness(c.elements[i], c.elements[i + 1]));
  return c;
}

bool ChainRepresentatives::verified() const {
  return diagonal_propagation && std::all_of(equal_checks.begin(), equal_checks.end(), [](bool b) { return b; });
}

ChainRepresentatives simultaneous_chain_representatives(const Chain& c) {
  if (c.elements.empty()) throw Error(ErrorCode::NotMaximalChain, "empty chain");
  const KMatrix& top = c.elements.back();
  const std::size_t n = top.n();
  const DivisionAlgebra k = top.division_algebra();
  const BaseField f = top.base_field();
  if (c.elements.size() != n)
    throw Error(ErrorCode::NotMaximalChain, "chain length " + std::to_string(c.elements.size()) + " differs from n");

  std::vector<PreparedElement> prepared;
  for (const auto& m : c.elements) {
    if (m.algebra() != top.algebra()) throw Error(ErrorCode::AlgebraMismatch, "chain mixes algebras");
    prepared.push_back(prepare(m));
  }

  KSubspace frame{k, n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (prepared[i].m0.dim() != i + 1)
      throw Error(ErrorCode::NotMaximalChain, "dim M0(A_" + std::to_string(i + 1) + ") is not " + std::to_string(i + 1));
    extend_frame(frame, prepared[i].m0.frame);
    if (frame.dim() != i + 1) throw Error(ErrorCode::NotMaximalChain, "norm-attaining spaces are not nested");
  }

  ChainRepresentatives out;
  out.right_frame = frame.frame;
  for (const auto& u : out.right_frame) out.left_frame.push_back((prepared.back().unit * u).normalized());
  for (std::size_t i = 1; i < n; ++i) out.representatives.push_back(partial_sum(f, out.left_frame, out.right_frame, i));
  out.representatives.push_back(top);

  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 == n) {
      out.equal_checks.push_back(true);
      continue;
    }
    out.equal_checks.push_back(outgoing_equal(prepare(out.representatives[i]), prepared[i]));
  }

  // With A_n diagonal and u_i = e_i (up to unit scalars), A_{n-1} must be diagonal too.
  if (n >= 2 && top.is_diagonal(1e-9 * top.frobenius_norm())) {
    bool standard = true;
    for (std::size_t i = 0; i < n; ++i) standard = standard && out.right_frame[i][i].abs() > 1.0 - 1e-9;
    if (standard) {
      const KMatrix& prev = c.elements[n - 2];
      const KMatrix& rep = out.representatives[n - 2];
      out.diagonal_propagation =
          prev.is_diagonal(1e-9 * prev.frobenius_norm()) && rep.is_diagonal(1e-9 * rep.frobenius_norm());
    }
  }
  return out;
}

bool is_right_symmetric(const KMatrix& a) {
  require_nonzero(a);
  return is_scalar_unitary(svd(a));
}

AsymmetryWitness right_asymmetry_witness(const KMatrix& a) {
  require_nonzero(a);
  const SVDResult s = svd(a);
  if (is_scalar_unitary(s)) throw Error(ErrorCode::UnitaryInput, "multiples of unitaries are right-symmetric");
  const std::size_t n = a.n();
  const DivisionAlgebra kk = a.division_algebra();
  const BaseField f = a.base_field();
  const std::size_t k = s.top_multiplicity();  // 1-based index of the last top singular value
  const double ratio = s.sigma[k] / s.sigma.front();
  const double nrm = std::sqrt(1.0 + ratio * ratio);

  // Zero-based positions p = k - 1 and q = k of the 2x2 block.
  const std::size_t p = k - 1, q = k;
  const KVector ep = e(kk, n, p), eq = e(kk, n, q);
  const KVector uk = std::sqrt(0.5) * (ep - eq);
  const KVector vk = (1.0 / nrm) * (ratio * ep + eq);
  const KVector uk1 = std::sqrt(0.5) * (ep + eq);
  const KVector vk1 = (1.0 / nrm) * (ep - ratio * eq);
  KMatrix b0(kk, f, n);
  for (std::size_t j = 0; j < p; ++j) b0(j, j) = 1.0;
  b0 += KMatrix::outer(f, uk, vk);
  b0 += KMatrix::outer(f, uk1, vk1);

  const KMatrix left = KMatrix::from_columns(f, s.left_frame);
  const KMatrix right = KMatrix::from_columns(f, s.right_frame);
  AsymmetryWitness w;
  w.witness = left * b0 * right.adjoint();
  w.a_perp_b = is_bj_orthogonal(a, w.witness);
  w.b_perp_a = is_bj_orthogonal(w.witness, a);
  return w;
}

AsymmetryWitness left_asymmetry_witness(const KMatrix& a) {
  require_nonzero(a);
  const std::size_t n = a.n();
  if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "left-asymmetry witness needs n >= 2");
  const DivisionAlgebra kk = a.division_algebra();
  const BaseField f = a.base_field();
  const SVDResult s = svd(a);
  const KMatrix left = KMatrix::from_columns(f, s.left_frame);
  const KMatrix right = KMatrix::from_columns(f, s.right_frame);
  auto back = [&](const KMatrix& m) { return left * m * right.adjoint(); };

  const KVector e1 = e(kk, n, 0), e2 = e(kk, n, 1);
  AsymmetryWitness w;
  w.stage = 1;
  w.witness = back(KMatrix::outer(f, e2, e2));
  w.a_perp_b = is_bj_orthogonal(a, w.witness);
  w.b_perp_a = is_bj_orthogonal(w.witness, a);
  if (w.a_perp_b.orthogonal && !w.b_perp_a.orthogonal) return w;

  // A = diag(s1, 0, ..., 0) in its frame.
  const double c = -0.5, sn = std::sqrt(3.0) / 2.0;
  const KVector x = c * e1 + sn * e2;
  const KVector y = -sn * e1 + c * e2;
  KMatrix b2 = KMatrix::outer(f, x, x) - (1.0 / 3.0) * KMatrix::outer(f, y, y);
  w.stage = 2;
  w.witness = back(b2);
  w.a_perp_b = is_bj_orthogonal(a, w.witness);
  w.b_perp_a = is_bj_orthogonal(w.witness, a);
  return w;
}

std::vector<int> successor_bucket_trace(const Chain& c, int sample_count, std::uint64_t seed) {
  if (c.elements.size() < 2) throw Error(ErrorCode::ChainTooShort, "successor analysis needs n >= 2");
  const ChainRepresentatives reps = simultaneous_chain_representatives(c);
  const KMatrix& top = c.elements.back();
  const std::size_t n = top.n();
  const DivisionAlgebra k = top.division_algebra();
  const BaseField f = top.base_field();

  // In the shared frames the representatives are diagonal: A_{n-1} ~ I_j + alpha + I_{n-j-1}.
  const KMatrix left = KMatrix::from_columns(f, reps.left_frame);
  const KMatrix right = KMatrix::from_columns(f, reps.right_frame);
  const KMatrix pre = left.adjoint() * reps.representatives[n - 2] * right;
  std::size_t slot = n;
  for (std::size_t i = 0; i < n; ++i)
    if (pre(i, i).abs() < 1.0 - tol::kCluster) slot = i;
  if (slot == n) throw Error(ErrorCode::NotMaximalChain, "A_{n-1} has no defective diagonal slot");
  const PreparedElement base = prepare(pre);

  Rng rng(derive_seed(seed, 0x5ecc));
  std::bernoulli_distribution coin(0.5);
  std::vector<PreparedElement> buckets;
  std::vector<int> trace;
  trace.reserve(static_cast<std::size_t>(std::max(sample_count, 0)));
  for (int draw = 0; draw < sample_count; ++draw) {
    const KScalar mu = k == DivisionAlgebra::R ? KScalar(coin(rng) ? 1.0 : -1.0) : random_unit_scalar(k, rng);
    KMatrix x = KMatrix::identity(k, f, n);
    x(slot, slot) = mu;
    const PreparedElement px = prepare(x);
    if (outgoing_subset(base, px) && !outgoing_subset(px, base)) {
      const bool known = std::any_of(buckets.begin(), buckets.end(), [&](const auto& b) { return outgoing_equal(b, px); });
      if (!known) buckets.push_back(px);
    }
    trace.push_back(static_cast<int>(buckets.size()));
  }
  return trace;
}

int successor_buckets(const Chain& c, int sample_count, std::uint64_t seed) {
  const auto trace = successor_bucket_trace(c, sample_count, seed);
  return trace.empty() ? 0 : trace.back();
}

}  // namespace bj
