#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "bj/algebra.hpp"
#include "bj/kmatrix.hpp"
#include "bj/orthograph.hpp"

namespace bj {

enum class TheoremCase { I, II, III, IV, AmbiguousDimOne };

std::string_view to_string(TheoremCase c) noexcept;

struct ClassificationEvidence {
  int dimension = 0;
  int chain_length = 0;
  /// Present only when the bucket probe ran (dim = n^2).
  std::optional<int> bucket_count;
  std::optional<bool> bucket_probe;
};

struct ClassificationResult {
  BaseField base_field = BaseField::R;
  DivisionAlgebra division_algebra = DivisionAlgebra::R;
  int n = 0;
  TheoremCase theorem_case = TheoremCase::I;
  ClassificationEvidence evidence;

  SimpleAlgebra algebra() const { return {division_algebra, base_field, n}; }
  bool matches(const SimpleAlgebra& a) const { return algebra() == a; }
};

/// Decision procedure on (dim, n). The probe is only called when dim = n^2.
/// Throws NotSimpleFiniteDimensional when no case applies.
ClassificationResult classify_from_invariants(int dim, int n, const std::function<bool()>& bucket_probe);

/// True iff the trace ends at exactly two buckets with no growth over its second half.
bool bucket_count_is_two(const std::vector<int>& trace);

/// Recover (F, K, n) of a simple algebra from dim and a maximal chain through a random element.
/// With verify set, throws CertificationFailed if the answer differs from the spec.
/// Throws NotSimple for multi-block specs and DimensionOne for dim 1.
ClassificationResult classify(const AlgebraSpec& algebra, int samples, std::uint64_t seed, bool verify = false);

/// Block-diagonal element of a direct sum, one matrix per block.
using BlockElement = std::vector<KMatrix>;

/// Norm of a direct-sum element: the largest block norm.
double block_norm(const BlockElement& x);

/// Brute-force BJ orthogonality in a direct sum, minimizing max_j ||A_j + lambda B_j||.
/// Throws BlockMismatch if A or B do not follow the block structure.
bool direct_sum_bj(const AlgebraSpec& algebra, const BlockElement& a, const BlockElement& b);

/// Partial identities P_1, ..., P_N of the block-diagonal embedding, each inclusion certified with
/// the witness P_k by direct_sum_bj. Throws FieldNotComplex, or CertificationFailed if a check fails.
struct ProjectionChain {
  std::vector<BlockElement> elements;
  std::vector<BlockElement> strictness_witnesses;

  std::size_t length() const noexcept { return elements.size(); }
};
ProjectionChain projection_chain(const AlgebraSpec& algebra);

struct SimplicityReport {
  int dimension = 0;
  int chain_length = 0;
  bool simple = false;
};

/// dim_C = N^2 with N the projection chain length. Throws FieldNotComplex.
SimplicityReport simplicity_test(const AlgebraSpec& algebra);

}  // namespace bj
