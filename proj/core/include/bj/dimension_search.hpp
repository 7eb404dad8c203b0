#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bj/kmatrix.hpp"
#include "bj/orthogonality.hpp"

namespace bj {

struct DimensionSearchResult {
  /// |Omega| for the greedy set whose common outgoing neighborhood looked trivial.
  int candidate_size = 0;
  /// Every sampled subset of size candidate_size - 1 had a common nonzero member.
  bool refuted_smaller = false;
  int refutation_trials = 0;
  int refutations_found = 0;
  std::vector<KMatrix> omega;
};

struct CommonMemberSearch {
  int restarts = 6;
  int max_evaluations = 40000;
  /// A candidate counts as a common member once every defect is at most this.
  double accept = 1e-6;
};

/// Nonzero B (unit Frobenius norm) with A perp B for every A in omega, found by pattern search over random
/// restarts, or nullopt. An empty omega returns a random B.
std::optional<KMatrix> find_common_member(const SimpleAlgebra& a, const std::vector<PreparedElement>& omega,
                                          std::uint64_t seed, const CommonMemberSearch& opts = {});

/// HEURISTIC search for the smallest Omega with trivial common outgoing neighborhood.
/// Greedily adds pool elements that are not orthogonal to the current common member until none is found,
/// then tries to refute size |Omega| - 1 on `trials` random pool subsets.
DimensionSearchResult graph_dimension_search(const SimpleAlgebra& a, int pool, int trials, std::uint64_t seed);

}  // namespace bj
