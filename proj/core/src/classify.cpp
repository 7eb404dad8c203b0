#include "bj/classify.hpp"

#include <algorithm>
#include <cmath>

#include "bj/error.hpp"
#include "bj/minimize.hpp"
#include "bj/random.hpp"
#include "bj/svd.hpp"
#include "bj/tolerances.hpp"

namespace bj {

namespace {

int exact_sqrt(int v) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v))));
  return r * r == v ? r : -1;
}

void require_conforming(const AlgebraSpec& algebra, const BlockElement& x) {
  if (x.size() != algebra.blocks.size()) throw Error(ErrorCode::BlockMismatch, "wrong number of blocks");
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto& b = algebra.blocks[j];
    if (x[j].division_algebra() != b.division_algebra || x[j].base_field() != algebra.base_field ||
        x[j].n() != static_cast<std::size_t>(b.n))
      throw Error(ErrorCode::BlockMismatch, "block " + std::to_string(j) + " has the wrong shape");
  }
}

void require_complex(const AlgebraSpec& algebra) {
  if (algebra.base_field != BaseField::C) throw Error(ErrorCode::FieldNotComplex, "needs a complex base field");
  algebra.validate();
}

BlockElement partial_identity(const AlgebraSpec& algebra, int k) {
  BlockElement p;
  int offset = 0;
  for (const auto& b : algebra.blocks) {
    KMatrix m(b.division_algebra, algebra.base_field, static_cast<std::size_t>(b.n));
    for (int i = 0; i < b.n; ++i)
      if (offset + i < k) m(i, i) = 1.0;
    p.push_back(std::move(m));
    offset += b.n;
  }
  return p;
}

}  // namespace

std::string_view to_string(TheoremCase c) noexcept {
  switch (c) {
    case TheoremCase::I: return "i";
    case TheoremCase::II: return "ii";
    case TheoremCase::III: return "iii";
    case TheoremCase::IV: return "iv";
    case TheoremCase::AmbiguousDimOne: return "ambiguous_dim_one";
  }
  return "?";
}

ClassificationResult classify_from_invariants(int dim, int n, const std::function<bool()>& bucket_probe) {
  if (dim < 1 || n < 1) throw Error(ErrorCode::NotSimpleFiniteDimensional, "dim and n must be positive");
  ClassificationResult r;
  r.n = n;
  r.evidence.dimension = dim;
  r.evidence.chain_length = n;
  if (dim == 1) {
    if (n != 1) throw Error(ErrorCode::NotSimpleFiniteDimensional, "dim 1 needs n = 1");
    r.theorem_case = TheoremCase::AmbiguousDimOne;
    return r;
  }
  const int root = exact_sqrt(dim);
  if (root < 0) {
    if (dim != 2 * n * n)
      throw Error(ErrorCode::NotSimpleFiniteDimensional,
                  "dim " + std::to_string(dim) + " is not a square and differs from 2n^2");
    r.division_algebra = DivisionAlgebra::C;
    r.theorem_case = TheoremCase::I;
    return r;
  }
  if (dim % 4 == 0 && 2 * n == root) {
    r.division_algebra = DivisionAlgebra::H;
    r.theorem_case = TheoremCase::II;
    return r;
  }
  if (root != n)
    throw Error(ErrorCode::NotSimpleFiniteDimensional,
                "dim " + std::to_string(dim) + " matches no case for n = " + std::to_string(n));
  const bool two = bucket_probe();
  r.evidence.bucket_probe = two;
  if (two) {
    r.theorem_case = TheoremCase::III;
  } else {
    r.base_field = BaseField::C;
    r.division_algebra = DivisionAlgebra::C;
    r.theorem_case = TheoremCase::IV;
  }
  return r;
}

bool bucket_count_is_two(const std::vector<int>& trace) {
  if (trace.empty() || trace.back() != 2) return false;
  return trace[trace.size() / 2] == trace.back();
}

ClassificationResult classify(const AlgebraSpec& algebra, int samples, std::uint64_t seed, bool verify) {
  algebra.validate();
  const SimpleAlgebra truth = algebra.as_simple();
  const int dim = algebra.dimension();
  if (dim == 1) throw Error(ErrorCode::DimensionOne, "dim 1 cannot tell M1(R) from M1(C)");

  Rng rng(derive_seed(seed, 0xc1a55));
  KMatrix a = random_matrix(truth, rng);
  while (a.is_zero()) a = random_matrix(truth, rng);
  const Chain chain = build_maximal_chain(a);
  const int n = static_cast<int>(chain.length());

  std::optional<int> buckets;
  auto probe = [&] {
    const auto trace = successor_bucket_trace(chain, samples, derive_seed(seed, 0xb0c));
    buckets = trace.empty() ? 0 : trace.back();
    return bucket_count_is_two(trace);
  };
  ClassificationResult r = classify_from_invariants(dim, n, probe);
  r.evidence.bucket_count = buckets;
  if (verify && !r.matches(truth))
    throw Error(ErrorCode::CertificationFailed, "classification disagrees with the specified algebra");
  return r;
}

double block_norm(const BlockElement& x) {
  double m = 0.0;
  for (const auto& b : x) m = std::max(m, operator_norm(b));
  return m;
}

bool direct_sum_bj(const AlgebraSpec& algebra, const BlockElement& a, const BlockElement& b) {
  require_conforming(algebra, a);
  require_conforming(algebra, b);
  const double na = block_norm(a);
  const double nb = block_norm(b);
  if (nb == 0.0 || na == 0.0) return true;
  const double threshold = na - tol::kBrute * std::max(1.0, na);
  auto objective = [&](std::complex<double> lam) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, operator_norm(a[j] + b[j].scaled(lam)));
    return m;
  };
  const FieldMinimum r = minimize_over_field(algebra.base_field, objective, 2.0 * na / nb, threshold);
  return r.value >= threshold;
}

ProjectionChain projection_chain(const AlgebraSpec& algebra) {
  require_complex(algebra);
  const int total = algebra.total_size();
  ProjectionChain c;
  for (int k = 1; k <= total; ++k) c.elements.push_back(partial_identity(algebra, k));
  for (int k = 0; k + 1 < total; ++k) {
    const BlockElement& lower = c.elements[static_cast<std::size_t>(k)];
    const BlockElement& upper = c.elements[static_cast<std::size_t>(k) + 1];
    // P_k lies in P_{k+1}^perp (P_{k+1} attains its norm at e_{k+1}, which P_k kills) but not in P_k^perp.
    if (!direct_sum_bj(algebra, upper, lower) || direct_sum_bj(algebra, lower, lower))
      throw Error(ErrorCode::CertificationFailed, "strictness witness P_" + std::to_string(k + 1) + " failed");
    c.strictness_witnesses.push_back(lower);
  }
  return c;
}

SimplicityReport simplicity_test(const AlgebraSpec& algebra) {
  require_complex(algebra);
  SimplicityReport r;
  r.dimension = algebra.dimension();
  r.chain_length = static_cast<int>(projection_chain(algebra).length());
  r.simple = r.dimension == r.chain_length * r.chain_length;
  return r;
}

}  // namespace bj
