// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: bj_acceptance [criterion ...]   (default: all of 1..10)

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "bj/classify.hpp"
#include "bj/cli/io.hpp"
#include "bj/cli/verify.hpp"
#include "bj/dimension_search.hpp"
#include "bj/error.hpp"
#include "bj/orthograph.hpp"
#include "bj/svd.hpp"

using namespace bj;

namespace {

using Algebras = std::vector<SimpleAlgebra>;

std::string name(const SimpleAlgebra& a) { return cli::format_algebra(AlgebraSpec::simple(a)); }

Algebras four_at(int n) {
  return {{DivisionAlgebra::R, BaseField::R, n},
          {DivisionAlgebra::C, BaseField::R, n},
          {DivisionAlgebra::H, BaseField::R, n},
          {DivisionAlgebra::C, BaseField::C, n}};
}

Algebras sizes(int lo, int hi) {
  Algebras out;
  for (int n = lo; n <= hi; ++n)
    for (auto a : four_at(n)) out.push_back(a);
  return out;
}

// Complex matrix representing A: A itself for K = R, C and the adjoint [[Z, W], [-conj W, conj Z]]
// for A = Z + W j over H. This avoids the real embedding used by the library.
Eigen::MatrixXcd complex_form(const KMatrix& a) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.n());
  const bool quat = a.division_algebra() == DivisionAlgebra::H;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(quat ? 2 * n : n, quat ? 2 * n : n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const KScalar q = a(i, j);
      const std::complex<double> z(q.w, q.x), w(q.y, q.z);
      m(i, j) = z;
      if (quat) {
        m(i, n + j) = w;
        m(n + i, j) = -std::conj(w);
        m(n + i, n + j) = std::conj(z);
      }
    }
  return m;
}

Eigen::VectorXd oracle_singular_values(const KMatrix& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(complex_form(a)).singularValues();
}

double oracle_norm(const KMatrix& a) { return a.n() == 0 ? 0.0 : oracle_singular_values(a)(0); }

int oracle_top_multiplicity(const KMatrix& a) {
  const Eigen::VectorXd s = oracle_singular_values(a);
  int m = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(0) - s(i) <= 1e-8 * s(0)) ++m;
  return a.division_algebra() == DivisionAlgebra::H ? m / 2 : m;
}

TheoremCase expected_case(const SimpleAlgebra& a) {
  if (a.base_field == BaseField::C) return TheoremCase::IV;
  switch (a.division_algebra) {
    case DivisionAlgebra::R: return TheoremCase::III;
    case DivisionAlgebra::C: return TheoremCase::I;
    default: return TheoremCase::II;
  }
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

// 1. Classification round trip.
void classification(Outcome& o) {
  int runs = 0;
  for (const auto& a : sizes(2, 4)) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      ++runs;
      try {
        const ClassificationResult r = classify(AlgebraSpec::simple(a), 500, seed);
        if (!r.matches(a) || r.theorem_case != expected_case(a))
          o.fail(name(a) + " seed " + std::to_string(seed) + " gave " + name(r.algebra()) + "; ");
      } catch (const Error& e) {
        o.fail(name(a) + " seed " + std::to_string(seed) + ": " + e.what() + "; ");
      }
    }
  }
  o.detail << runs << " classifications";
}

// 2. Chain length law with dim M0(A_i) = i.
void chain_length(Outcome& o) {
  int chains = 0;
  for (const auto& a : sizes(2, 4)) {
    Rng rng(derive_seed(2, static_cast<std::uint64_t>(chains)));
    for (int t = 0; t < 100; ++t, ++chains) {
      const Chain c = build_maximal_chain(random_matrix(a, rng));
      if (c.length() != static_cast<std::size_t>(a.n)) {
        o.fail(name(a) + " chain of length " + std::to_string(c.length()) + "; ");
        continue;
      }
      for (std::size_t i = 0; i < c.length(); ++i)
        if (oracle_top_multiplicity(c.elements[i]) != static_cast<int>(i) + 1)
          o.fail(name(a) + " dim M0(A_" + std::to_string(i + 1) + ") wrong; ");
    }
  }
  o.detail << chains << " chains";
}

// 3. Exact vs brute-force orthogonality.
void oracle(Outcome& o) {
  double worst_agreement = 1.0;
  std::string worst;
  for (const auto& a : sizes(1, 5)) {
    const cli::OracleStats s = cli::oracle_agreement(a, 1000, 3);
    if (s.agreement() < worst_agreement) {
      worst_agreement = s.agreement();
      worst = name(a);
    }
    if (s.agreement() < 0.995) o.fail(name(a) + " agreement " + std::to_string(s.agreement()) + "; ");
    if (s.wide_disagreements > 0)
      o.fail(name(a) + " has " + std::to_string(s.wide_disagreements) + " disagreements with margin >= 10 tol; ");
  }
  o.detail << "20 algebras x 1000 pairs, lowest agreement " << worst_agreement;
  if (!worst.empty()) o.detail << " (" << worst << ")";
}

// 4. Right symmetry iff multiple of a unitary.
void right_symmetry(Outcome& o) {
  int witnesses = 0, samples = 0;
  for (const auto& a : sizes(2, 4)) {
    Rng rng(derive_seed(4, static_cast<std::uint64_t>(witnesses)));
    for (int t = 0; t < 100; ++t, ++witnesses) {
      const KMatrix x = random_matrix(a, rng);
      const AsymmetryWitness w = right_asymmetry_witness(x);
      if (!w.b_perp_a.orthogonal || w.a_perp_b.orthogonal || !is_bj_orthogonal_bruteforce(w.witness, x) ||
          is_bj_orthogonal_bruteforce(x, w.witness))
        o.fail(name(a) + " right witness failed; ");
    }
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (int t = 0; t < 100; ++t) {
      const KMatrix u = scale(rng) * random_unitary(a, rng);
      const PreparedElement pu = prepare(u);
      for (int s = 0; s < 200; ++s, ++samples) {
        const KMatrix b = cli::random_orthogonal_from(u, rng);
        if (!is_bj_orthogonal(b, u).orthogonal) o.fail(name(a) + " sampler produced B not perp U; ");
        if (!is_bj_orthogonal(pu, b).orthogonal) o.fail(name(a) + " right-symmetry violation; ");
      }
    }
  }
  o.detail << witnesses << " witnesses, " << samples << " unitary samples";
}

// 5. No left-symmetric elements.
void left_symmetry(Outcome& o) {
  int count = 0;
  for (const auto& a : sizes(2, 4)) {
    Rng rng(derive_seed(5, static_cast<std::uint64_t>(count)));
    for (int t = 0; t < 100; ++t, ++count) {
      // Every fifth input is rank one, which needs the second construction.
      KMatrix x = random_matrix(a, rng);
      if (t % 5 == 0) {
        std::vector<double> sigma(a.n, 0.0);
        sigma[0] = 1.0 + t;
        x = random_with_singular_values(a, sigma, rng);
      }
      const AsymmetryWitness w = left_asymmetry_witness(x);
      if (!w.a_perp_b.orthogonal || w.b_perp_a.orthogonal || !is_bj_orthogonal_bruteforce(x, w.witness) ||
          is_bj_orthogonal_bruteforce(w.witness, x))
        o.fail(name(a) + " left witness failed; ");
    }
  }
  o.detail << count << " witnesses";
}

// 6. Successor buckets.
void buckets(Outcome& o) {
  const Algebras two = {{DivisionAlgebra::R, BaseField::R, 2}, {DivisionAlgebra::R, BaseField::R, 3}};
  const Algebras many = {{DivisionAlgebra::C, BaseField::C, 2},
                         {DivisionAlgebra::C, BaseField::C, 3},
                         {DivisionAlgebra::H, BaseField::R, 2}};
  Rng rng(6);
  for (const auto& a : two) {
    const int b = successor_buckets(build_maximal_chain(random_matrix(a, rng)), 500, 6);
    o.detail << name(a) << "=" << b << " ";
    if (b != 2) o.fail("");
  }
  for (const auto& a : many) {
    const int b = successor_buckets(build_maximal_chain(random_matrix(a, rng)), 500, 6);
    o.detail << name(a) << "=" << b << " ";
    if (b < 100) o.fail("");
  }
}

// 7. The 4x4 fixture chain.
void fixture_chain(Outcome& o) {
  const Chain c = cli::chain_from_json(cli::read_json(std::string(BJ_FIXTURE_DIR) + "/chain4.json"));
  for (std::size_t i = 0; i + 1 < c.length(); ++i)
    if (!outgoing_subset(c.elements[i], c.elements[i + 1]) || outgoing_subset(c.elements[i + 1], c.elements[i]))
      o.fail("inclusion " + std::to_string(i + 1) + " not strict; ");
  const ChainRepresentatives r = simultaneous_chain_representatives(c);
  for (std::size_t i = 0; i < r.representatives.size(); ++i) {
    if (!r.representatives[i].is_diagonal(1e-9)) o.fail("representative " + std::to_string(i + 1) + " not diagonal; ");
    if (!outgoing_equal(r.representatives[i], c.elements[i]))
      o.fail("representative " + std::to_string(i + 1) + " fails outgoing_equal; ");
  }
  o.detail << "length " << c.length() << ", " << r.representatives.size() << " diagonal representatives";
}

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

// 8. Simplicity through projection chains.
void simplicity(Outcome& o) {
  int specs = 0;
  for (int total = 1; total <= 5; ++total) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(total, total, cur, parts);
    for (const auto& p : parts) {
      AlgebraSpec s;
      s.base_field = BaseField::C;
      for (int n : p) s.blocks.push_back({DivisionAlgebra::C, n});
      const SimplicityReport r = simplicity_test(s);
      ++specs;
      if (r.simple != (p.size() == 1) || r.chain_length != total)
        o.fail(cli::format_algebra(s) + " misjudged; ");
    }
  }
  AlgebraSpec m21{BaseField::C, {{DivisionAlgebra::C, 2}, {DivisionAlgebra::C, 1}}};
  const SimplicityReport r = simplicity_test(m21);
  if (r.dimension != 5 || r.chain_length != 3 || r.simple) o.fail("M2(C)+M1(C) misjudged; ");
  o.detail << specs << " partitions";
}

// 9. SVD reconstruction and norm preservation.
void kernel(Outcome& o) {
  double worst_residual = 0.0, worst_norm = 0.0;
  int count = 0;
  for (auto k : {DivisionAlgebra::R, DivisionAlgebra::C, DivisionAlgebra::H}) {
    Rng rng(derive_seed(9, static_cast<std::uint64_t>(k)));
    std::uniform_int_distribution<int> size(1, 8);
    for (int t = 0; t < 200; ++t, ++count) {
      const SimpleAlgebra a{k, BaseField::R, size(rng)};
      // Mix in rank-deficient inputs and repeated singular values.
      KMatrix x = random_matrix(a, rng);
      if (t % 4 == 1) {
        std::vector<double> sigma(a.n, 1.5);
        for (int i = a.n / 2; i < a.n; ++i) sigma[i] = 0.0;
        x = random_with_singular_values(a, sigma, rng);
      }
      const SVDResult s = svd(x);
      const double sigma1 = oracle_norm(x);
      const double residual = oracle_norm(x - s.reconstruct(a.base_field));
      worst_residual = std::max(worst_residual, residual / sigma1);
      const double drift = std::abs(operator_norm(x) - sigma1);
      worst_norm = std::max(worst_norm, drift);
      if (residual > 1e-9 * sigma1) o.fail(name(a) + " reconstruction residual " + std::to_string(residual) + "; ");
      if (drift > 1e-9) o.fail(name(a) + " norm drift " + std::to_string(drift) + "; ");
    }
  }
  o.detail << count << " matrices, worst residual/sigma1 " << worst_residual << ", worst norm drift " << worst_norm;
}

// 10. Dimension search.
void dimension_search(Outcome& o) {
  const std::vector<std::pair<SimpleAlgebra, int>> cases = {{{DivisionAlgebra::R, BaseField::R, 1}, 1},
                                                            {{DivisionAlgebra::R, BaseField::R, 2}, 4},
                                                            {{DivisionAlgebra::H, BaseField::R, 1}, 4},
                                                            {{DivisionAlgebra::C, BaseField::R, 2}, 8},
                                                            {{DivisionAlgebra::H, BaseField::R, 2}, 16}};
  for (const auto& [a, want] : cases) {
    if (a.dimension() != want) o.fail(name(a) + " expected size is not dim_R; ");
    const DimensionSearchResult r = graph_dimension_search(a, 40, 5, 11);
    o.detail << name(a) << "=" << r.candidate_size << (r.refuted_smaller ? "" : "(unrefuted)") << " ";
    if (r.candidate_size != want || !r.refuted_smaller) o.fail("");
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"classification round trip", classification},
      {"chain length law", chain_length},
      {"exact vs brute-force agreement", oracle},
      {"right symmetry iff unitary multiple", right_symmetry},
      {"no left-symmetric elements", left_symmetry},
      {"successor buckets", buckets},
      {"4x4 fixture chain", fixture_chain},
      {"simplicity over partitions", simplicity},
      {"SVD residual and norm preservation", kernel},
      {"dimension search", dimension_search},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("%s %2d %-38s %7.1fs  %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), secs,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
