#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bj/kmatrix.hpp"
#include "bj/orthogonality.hpp"

namespace bj {

/// Elements with strictly increasing outgoing neighborhoods.
struct Chain {
  std::vector<KMatrix> elements;
  /// strictness_witnesses[i] lies in elements[i+1]^perp but not in elements[i]^perp.
  std::vector<KMatrix> strictness_witnesses;

  std::size_t length() const noexcept { return elements.size(); }
};

/// A1^perp is contained in A2^perp: M0(A1) inside M0(A2) and A1 u = alpha A2 u on M0(A1)
/// for a single nonzero F-scalar alpha. Throws ZeroMatrix for a zero operand.
bool outgoing_subset(const KMatrix& a1, const KMatrix& a2);
bool outgoing_subset(const PreparedElement& a1, const PreparedElement& a2);

bool outgoing_equal(const KMatrix& a1, const KMatrix& a2);
bool outgoing_equal(const PreparedElement& a1, const PreparedElement& a2);

/// Next element up the chain: sum_{i <= k+1} v_i u_i* with k = dim M0(A).
/// Empty when A is already a scalar multiple of a unitary.
std::optional<KMatrix> refine(const KMatrix& a);

/// lower * P, with P the projector onto M0(lower). It lies in upper^perp but not in
/// lower^perp whenever lower^perp is strictly contained in upper^perp.
KMatrix strictness_witness(const KMatrix& lower, const KMatrix& upper);

/// Maximal chain through A: the SVD ladder below A, A itself, then refine() up to a unitary.
Chain build_maximal_chain(const KMatrix& a);

struct ChainRepresentatives {
  /// B_1, ..., B_{n-1}, A_n sharing one pair of frames.
  std::vector<KMatrix> representatives;
  /// equal_checks[i]: outgoing_equal(representatives[i], chain.elements[i]).
  std::vector<bool> equal_checks;
  /// Right frame u_1, ..., u_n with span{u_1..u_i} = M0(A_i).
  std::vector<KVector> right_frame;
  std::vector<KVector> left_frame;
  /// False if A_n is diagonal, the frame is the standard basis, yet A_{n-1} or B_{n-1} is not diagonal.
  bool diagonal_propagation = true;

  bool verified() const;
};

/// Throws NotMaximalChain unless the chain has length n with dim M0(A_i) = i and nested M0's.
ChainRepresentatives simultaneous_chain_representatives(const Chain& c);

/// Right-symmetric iff A is a nonzero multiple of a unitary. Throws ZeroMatrix.
bool is_right_symmetric(const KMatrix& a);

struct AsymmetryWitness {
  KMatrix witness;
  /// Left witness: 1 for e2 e2*, 2 for the rotated rank-two construction. Right witness: 1.
  int stage = 1;
  OrthogonalityVerdict a_perp_b;
  OrthogonalityVerdict b_perp_a;
};

/// B with B perp A and not A perp B. Throws UnitaryInput if A is a multiple of a unitary.
AsymmetryWitness right_asymmetry_witness(const KMatrix& a);
/// B with A perp B and not B perp A. Throws DimensionTooSmall for n = 1, ZeroMatrix for A = 0.
AsymmetryWitness left_asymmetry_witness(const KMatrix& a);

/// Bucket counts after each of `sample_count` successor draws above A_{n-1}.
/// Throws ChainTooShort for n < 2 and NotMaximalChain via the representatives.
std::vector<int> successor_bucket_trace(const Chain& c, int sample_count, std::uint64_t seed);
int successor_buckets(const Chain& c, int sample_count, std::uint64_t seed);

}  // namespace bj
