#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bj/cli/io.hpp"
#include "bj/cli/verify.hpp"
#include "bj/digraph.hpp"
#include "bj/dimension_search.hpp"
#include "bj/error.hpp"
#include "bj/orthograph.hpp"
#include "bj/svd.hpp"
#include "support.hpp"

using namespace bj;
using namespace bjtest;

namespace {

// Multiplicity of the top singular value, from Eigen on the real embedding.
int eigen_top_multiplicity(const KMatrix& a) {
  const Eigen::VectorXd s = eigen_singular_values(a);
  int m = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(0) - s(i) < 1e-8 * s(0)) ++m;
  return m / real_dim(a.division_algebra());
}

KMatrix chain4_element(int i) {
  switch (i) {
    case 0: return real_diag({1, 0, 0, 0});
    case 1: {
      KMatrix m = real_diag({1, 1, 0, 0});
      m(2, 3) = 0.5;
      m(3, 2) = 0.5;
      return m;
    }
    case 2: return real_diag({1, 1, 1, 0});
    default: return real_diag({1, 1, 1, 1});
  }
}

Chain load_chain(const std::string& file) {
  return cli::chain_from_json(cli::read_json(std::string(BJ_FIXTURE_DIR) + "/" + file));
}

}  // namespace

TEST(OutgoingSubset, DiagonalExamples) {
  const KMatrix half = real_diag({1.0, 0.5});
  const KMatrix third = real_diag({1.0, 1.0 / 3.0});
  EXPECT_TRUE(outgoing_equal(half, third));
  EXPECT_TRUE(outgoing_subset(half, KMatrix::identity(mr(2))));
  EXPECT_FALSE(outgoing_subset(KMatrix::identity(mr(2)), half));
  EXPECT_FALSE(outgoing_subset(real_diag({1.0, 0.0}), real_diag({0.0, 1.0})));
  EXPECT_THROW(outgoing_subset(KMatrix(mr(2)), half), Error);
}

TEST(OutgoingSubset, FixtureChainIsStrict) {
  for (int i = 0; i + 1 < 4; ++i) {
    EXPECT_TRUE(outgoing_subset(chain4_element(i), chain4_element(i + 1))) << i;
    EXPECT_FALSE(outgoing_subset(chain4_element(i + 1), chain4_element(i))) << i;
  }
}

// Sampled implication against the definition: B in A1^perp must lie in A2^perp.
TEST(OutgoingSubset, ImpliesSampledInclusion) {
  Rng rng(31);
  for (auto a : {mr(3), mcr(2), mh(2), mcc(3)}) {
    for (int t = 0; t < 6; ++t) {
      const Chain c = build_maximal_chain(random_matrix(a, rng));
      for (std::size_t i = 0; i + 1 < c.length(); ++i) {
        ASSERT_TRUE(outgoing_subset(c.elements[i], c.elements[i + 1]));
        for (int s = 0; s < 3; ++s) {
          const KMatrix b = cli::make_orthogonal_to(c.elements[i], random_matrix(a, rng));
          ASSERT_TRUE(is_bj_orthogonal_bruteforce(c.elements[i], b)) << name(a);
          EXPECT_TRUE(is_bj_orthogonal_bruteforce(c.elements[i + 1], b)) << name(a);
        }
      }
    }
  }
}

TEST(OutgoingSubset, InvariantUnderPositiveScaling) {
  Rng rng(32);
  for (auto a : all_at(3)) {
    const Chain c = build_maximal_chain(random_matrix(a, rng));
    for (std::size_t i = 0; i + 1 < c.length(); ++i) {
      EXPECT_TRUE(outgoing_subset(3.5 * c.elements[i], 0.25 * c.elements[i + 1]));
      EXPECT_TRUE(outgoing_equal(c.elements[i], 7.0 * c.elements[i]));
    }
  }
}

TEST(Refine, RaisesTopMultiplicityByOne) {
  Rng rng(33);
  for (auto a : all_at(4)) {
    KMatrix x = random_matrix(a, rng);
    for (int k = 1; k < a.n; ++k) {
      ASSERT_EQ(eigen_top_multiplicity(x), k) << name(a);
      const auto next = refine(x);
      ASSERT_TRUE(next.has_value());
      EXPECT_TRUE(outgoing_subset(x, *next));
      EXPECT_FALSE(outgoing_subset(*next, x));
      x = *next;
    }
    EXPECT_FALSE(refine(x).has_value());
    EXPECT_TRUE(is_right_symmetric(x));
  }
}

TEST(StrictnessWitness, SeparatesConsecutiveElements) {
  for (int i = 0; i + 1 < 4; ++i) {
    const KMatrix w = strictness_witness(chain4_element(i), chain4_element(i + 1));
    EXPECT_TRUE(is_bj_orthogonal_bruteforce(chain4_element(i + 1), w));
    EXPECT_FALSE(is_bj_orthogonal_bruteforce(chain4_element(i), w));
  }
}

TEST(MaximalChain, LengthLaw) {
  Rng rng(34);
  for (int n = 1; n <= 4; ++n) {
    for (auto a : all_at(n)) {
      for (int t = 0; t < 5; ++t) {
        const KMatrix x = random_matrix(a, rng);
        const Chain c = build_maximal_chain(x);
        ASSERT_EQ(c.length(), static_cast<std::size_t>(n)) << name(a);
        ASSERT_EQ(c.strictness_witnesses.size(), c.length() - 1);
        for (std::size_t i = 0; i < c.length(); ++i)
          EXPECT_EQ(eigen_top_multiplicity(c.elements[i]), static_cast<int>(i) + 1) << name(a);
        EXPECT_TRUE(std::any_of(c.elements.begin(), c.elements.end(),
                                [&](const KMatrix& e) { return outgoing_equal(e, x); }));
      }
    }
  }
}

TEST(MaximalChain, ThroughElementWithRepeatedTopSingularValue) {
  Rng rng(35);
  for (auto a : all_at(5)) {
    const KMatrix x = random_with_singular_values(a, {2.0, 2.0, 1.0, 0.5, 0.0}, rng);
    const Chain c = build_maximal_chain(x);
    ASSERT_EQ(c.length(), 5u);
    EXPECT_TRUE(outgoing_equal(c.elements[1], x));
    EXPECT_TRUE(cli::validate_chain(c).passed()) << cli::validate_chain(c).failures().dump();
  }
}

TEST(Representatives, FixtureChainIsDiagonalizable) {
  const Chain c = load_chain("chain4.json");
  const ChainRepresentatives r = simultaneous_chain_representatives(c);
  EXPECT_TRUE(r.verified());
  ASSERT_EQ(r.representatives.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(r.representatives[i].is_diagonal(1e-9)) << i;
    EXPECT_TRUE(r.equal_checks[i]);
    EXPECT_TRUE(outgoing_equal(r.representatives[i], c.elements[i]));
  }
  EXPECT_TRUE(r.diagonal_propagation);
}

TEST(Representatives, PerturbedOffDiagonalStillValid) {
  EXPECT_TRUE(cli::validate_chain(load_chain("chain4_offdiag_0.6.json")).passed());
}

TEST(Representatives, BrokenFixtureIsRejected) {
  const Chain c = load_chain("chain4_broken.json");
  EXPECT_THROW(simultaneous_chain_representatives(c), Error);
  EXPECT_FALSE(cli::validate_chain(c).passed());
}

TEST(Representatives, RandomChains) {
  Rng rng(36);
  for (auto a : all_at(4)) {
    for (int t = 0; t < 4; ++t) {
      const Chain c = build_maximal_chain(random_matrix(a, rng));
      const ChainRepresentatives r = simultaneous_chain_representatives(c);
      EXPECT_TRUE(r.verified()) << name(a);
      // The frames are K-orthonormal.
      const KMatrix u = KMatrix::from_columns(a.base_field, r.right_frame);
      const KMatrix v = KMatrix::from_columns(a.base_field, r.left_frame);
      EXPECT_LT(max_entry_diff(u.adjoint() * u, KMatrix::identity(a)), 1e-9);
      EXPECT_LT(max_entry_diff(v.adjoint() * v, KMatrix::identity(a)), 1e-9);
    }
  }
}

TEST(Representatives, RejectsNonMaximalChain) {
  Chain c;
  c.elements = {chain4_element(0), chain4_element(2)};
  EXPECT_THROW(simultaneous_chain_representatives(c), Error);
}

TEST(Symmetry, RightSymmetricIffUnitaryMultiple) {
  Rng rng(37);
  for (auto a : all_at(3)) {
    EXPECT_TRUE(is_right_symmetric(2.5 * random_unitary(a, rng)));
    EXPECT_FALSE(is_right_symmetric(random_matrix(a, rng)));
  }
  EXPECT_THROW(is_right_symmetric(KMatrix(mr(2))), Error);
}

TEST(Symmetry, RightWitnessAgainstBruteForce) {
  Rng rng(38);
  for (int n = 2; n <= 3; ++n) {
    for (auto a : all_at(n)) {
      for (int t = 0; t < 5; ++t) {
        const KMatrix x = random_matrix(a, rng);
        const AsymmetryWitness w = right_asymmetry_witness(x);
        EXPECT_TRUE(w.b_perp_a.orthogonal);
        EXPECT_FALSE(w.a_perp_b.orthogonal);
        EXPECT_TRUE(is_bj_orthogonal_bruteforce(w.witness, x)) << name(a);
        EXPECT_FALSE(is_bj_orthogonal_bruteforce(x, w.witness)) << name(a);
      }
    }
  }
  EXPECT_THROW(right_asymmetry_witness(KMatrix::identity(mr(2))), Error);
}

TEST(Symmetry, UnitaryMultiplesAreRightSymmetricOnSamples) {
  Rng rng(39);
  for (auto a : all_at(3)) {
    const KMatrix u = 1.7 * random_unitary(a, rng);
    for (int t = 0; t < 20; ++t) {
      const KMatrix b = cli::random_orthogonal_from(u, rng);
      ASSERT_TRUE(is_bj_orthogonal_bruteforce(b, u)) << name(a);
      EXPECT_TRUE(is_bj_orthogonal_bruteforce(u, b)) << name(a);
    }
  }
}

TEST(Symmetry, LeftWitnessAgainstBruteForce) {
  Rng rng(40);
  for (int n = 2; n <= 3; ++n) {
    for (auto a : all_at(n)) {
      std::vector<KMatrix> inputs = {random_matrix(a, rng), KMatrix::identity(a),
                                     random_with_singular_values(a, std::vector<double>(n, 1.0), rng)};
      std::vector<double> rank_one(n, 0.0);
      rank_one[0] = 2.0;
      inputs.push_back(random_with_singular_values(a, rank_one, rng));
      for (const KMatrix& x : inputs) {
        const AsymmetryWitness w = left_asymmetry_witness(x);
        EXPECT_TRUE(w.a_perp_b.orthogonal);
        EXPECT_FALSE(w.b_perp_a.orthogonal);
        EXPECT_TRUE(is_bj_orthogonal_bruteforce(x, w.witness)) << name(a);
        EXPECT_FALSE(is_bj_orthogonal_bruteforce(w.witness, x)) << name(a);
      }
    }
  }
  EXPECT_THROW(left_asymmetry_witness(KMatrix::identity(mr(1))), Error);
  EXPECT_THROW(left_asymmetry_witness(KMatrix(mr(2))), Error);
}

TEST(Symmetry, LeftWitnessStages) {
  const KMatrix e2e2 = real_diag({0.0, 1.0});
  EXPECT_EQ(left_asymmetry_witness(real_diag({1.0, 0.5})).stage, 1);
  EXPECT_EQ(left_asymmetry_witness(KMatrix::identity(mr(2))).stage, 1);
  // e2 e2* is orthogonal to a rank-one A in both directions, so the rotated construction takes over.
  const AsymmetryWitness r = left_asymmetry_witness(real_diag({1.0, 0.0}));
  EXPECT_EQ(r.stage, 2);
  EXPECT_TRUE(is_bj_orthogonal_bruteforce(real_diag({1.0, 0.0}), r.witness));
  EXPECT_FALSE(is_bj_orthogonal_bruteforce(r.witness, real_diag({1.0, 0.0})));
  EXPECT_TRUE(is_bj_orthogonal(real_diag({1.0, 0.5}), e2e2).orthogonal);
  EXPECT_FALSE(is_bj_orthogonal(e2e2, real_diag({1.0, 0.5})).orthogonal);
}

TEST(Buckets, RealAlgebrasHaveTwo) {
  Rng rng(41);
  for (auto a : {mr(2), mr(3)}) {
    const Chain c = build_maximal_chain(random_matrix(a, rng));
    EXPECT_EQ(successor_buckets(c, 200, 5), 2) << name(a);
  }
}

TEST(Buckets, ComplexAndQuaternionAlgebrasHaveMany) {
  Rng rng(42);
  for (auto a : {mcc(2), mh(2)}) {
    const Chain c = build_maximal_chain(random_matrix(a, rng));
    EXPECT_GE(successor_buckets(c, 200, 5), 100) << name(a);
  }
}

TEST(Buckets, TraceIsMonotoneAndDeterministic) {
  Rng rng(43);
  const Chain c = build_maximal_chain(random_matrix(mcc(3), rng));
  const auto t1 = successor_bucket_trace(c, 50, 9);
  EXPECT_EQ(t1, successor_bucket_trace(c, 50, 9));
  ASSERT_EQ(t1.size(), 50u);
  EXPECT_TRUE(std::is_sorted(t1.begin(), t1.end()));
  Chain one;
  one.elements = {KMatrix::identity(mr(1))};
  EXPECT_THROW(successor_bucket_trace(one, 10, 0), Error);
}

TEST(Digraph, ZeroIsAUniversalTarget) {
  const DigraphSample g = sample_digraph(AlgebraSpec::simple(mcc(2)), 6, 3, true);
  ASSERT_EQ(g.vertices.size(), 7u);
  for (std::size_t j = 0; j < g.vertices.size(); ++j) EXPECT_TRUE(g.has_edge(0, j));
  for (std::size_t i = 1; i < g.vertices.size(); ++i) {
    EXPECT_TRUE(g.has_edge(i, 0));
    EXPECT_FALSE(g.has_edge(i, i));
  }
}

TEST(Digraph, EdgesMatchBruteForce) {
  const DigraphSample g = sample_digraph(AlgebraSpec::simple(mr(2)), 12, 4);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = 0; j < g.vertices.size(); ++j)
      EXPECT_EQ(g.has_edge(i, j), is_bj_orthogonal_bruteforce(g.vertices[i], g.vertices[j])) << i << "->" << j;
}

TEST(Digraph, DeterministicInSeed) {
  const AlgebraSpec s = AlgebraSpec::simple(mh(2));
  const DigraphSample a = sample_digraph(s, 8, 11);
  const DigraphSample b = sample_digraph(s, 8, 11);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_THROW(sample_digraph(AlgebraSpec{BaseField::C, {{DivisionAlgebra::C, 2}, {DivisionAlgebra::C, 1}}}, 4, 0), Error);
  EXPECT_THROW(sample_digraph(s, 0, 0), Error);
}

TEST(Digraph, ProjectiveModeMergesScalarLines) {
  const KMatrix x = real_diag({1.0, 0.5});
  const DigraphSample g = build_digraph(mr(2), {x, -2.0 * x, real_diag({0.0, 1.0})});
  const auto classes = reduced_classes(g);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0], (std::vector<std::size_t>{0, 1}));

  const DigraphSample p = sample_digraph(AlgebraSpec::simple(mcc(2)), 10, 5, false, true);
  for (const auto& v : p.vertices) EXPECT_NEAR(v.frobenius_norm(), 1.0, 1e-12);
}

TEST(Digraph, ReducedClassesPartitionVertices) {
  const DigraphSample g = sample_digraph(AlgebraSpec::simple(mr(2)), 10, 6, true);
  std::set<std::size_t> seen;
  for (const auto& c : reduced_classes(g))
    for (std::size_t v : c) EXPECT_TRUE(seen.insert(v).second);
  EXPECT_EQ(seen.size(), g.vertices.size());
}

TEST(DimensionSearch, CommonMemberOfEmptyAndSingleton) {
  Rng rng(44);
  const KMatrix a = random_matrix(mr(2), rng);
  const auto b = find_common_member(mr(2), {prepare(a)}, 1);
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(is_bj_orthogonal_bruteforce(a, *b));
  EXPECT_TRUE(find_common_member(mr(2), {}, 1).has_value());
}

TEST(DimensionSearch, SmallAlgebras) {
  for (auto [a, want] : std::vector<std::pair<SimpleAlgebra, int>>{{mr(1), 1}, {mr(2), 4}, {mh(1), 4}}) {
    const DimensionSearchResult r = graph_dimension_search(a, 24, 6, 7);
    EXPECT_EQ(r.candidate_size, want) << name(a);
    EXPECT_TRUE(r.refuted_smaller) << name(a);
    EXPECT_EQ(r.omega.size(), static_cast<std::size_t>(r.candidate_size));
  }
}
