#include "bj/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bj/classify.hpp"
#include "bj/error.hpp"
#include "bj/orthogonality.hpp"
#include "bj/svd.hpp"
#include "bj/tolerances.hpp"

namespace bj::cli {

using nlohmann::json;

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

json SuiteReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", suite}, {"passed", passed()}, {"checks", std::move(list)}};
}

json SuiteReport::failures() const {
  json list = json::array();
  for (const auto& c : checks)
    if (!c.passed) list.push_back({{"name", c.name}, {"detail", c.detail}});
  return list;
}

namespace {

std::string count_detail(int bad, int total) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " passed";
}

KMatrix scaled_by(const KMatrix& a, std::complex<double> alpha) {
  if (a.base_field() == BaseField::R) return alpha.real() * a;
  return a.scaled(alpha);
}

}  // namespace

KMatrix random_orthogonal_from(const KMatrix& a, Rng& rng) {
  const SimpleAlgebra alg = a.algebra();
  const BaseField f = a.base_field();
  const std::size_t n = a.n();
  const KVector u = random_vector(alg.division_algebra, n, rng).normalized();
  const KVector au = a * u;
  KVector v = random_vector(alg.division_algebra, n, rng);
  const double nau = au.norm();
  if (nau > 0.0) {
    // Remove the F-component of v along Au.
    const std::complex<double> c = field_inner(f, v, au) / (nau * nau);
    v -= au.times(KScalar(c));
  }
  if (v.norm() < 1e-12) return KMatrix(alg);
  v = v.normalized();

  const KMatrix id = KMatrix::identity(alg);
  KMatrix w = (id - KMatrix::outer(f, v, v)) * random_matrix(alg, rng) * (id - KMatrix::outer(f, u, u));
  const double nw = operator_norm(w);
  if (nw > 0.0) w = (0.5 / nw) * w;
  return KMatrix::outer(f, v, u) + w;
}

KMatrix make_orthogonal_to(const KMatrix& a, const KMatrix& b) {
  const PreparedElement p = prepare(a);
  const KVector& u = p.m0.frame.front();
  const KVector x = a * u, y = b * u;
  const std::complex<double> alpha = field_inner(a.base_field(), y, x) / (x.norm() * x.norm());
  return b - scaled_by(a, alpha);
}

OraclePair random_oracle_pair(const SimpleAlgebra& alg, Rng& rng) {
  std::uniform_int_distribution<int> mult(1, alg.n);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  const int m = mult(rng);
  std::vector<double> sigma(static_cast<std::size_t>(alg.n), 1.0);
  for (std::size_t i = static_cast<std::size_t>(m); i < sigma.size(); ++i) sigma[i] = unit(rng);
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  const double scale = 0.2 + 3.0 * unit(rng);
  for (auto& s : sigma) s *= scale;
  OraclePair p{random_with_singular_values(alg, sigma, rng), random_matrix(alg, rng)};
  if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < 1.0 / 3.0) p.b = make_orthogonal_to(p.a, p.b);
  return p;
}

OracleStats oracle_agreement(const SimpleAlgebra& alg, int pairs, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x0a));
  OracleStats s;
  for (int i = 0; i < pairs; ++i) {
    const OraclePair p = random_oracle_pair(alg, rng);
    const OrthogonalityVerdict exact = is_bj_orthogonal(p.a, p.b);
    const bool brute = is_bj_orthogonal_bruteforce(p.a, p.b);
    ++s.pairs;
    if (exact.orthogonal == brute) {
      ++s.agreements;
      continue;
    }
    s.worst_disagreement_margin = std::max(s.worst_disagreement_margin, std::abs(exact.margin));
    if (std::abs(exact.margin) >= 10.0 * tol::kOrth) ++s.wide_disagreements;
  }
  return s;
}

SuiteReport validate_chain(const Chain& c) {
  SuiteReport r;
  r.suite = "chain";
  const std::size_t n = c.elements.back().n();
  r.add("length equals n", c.length() == n, std::to_string(c.length()) + " vs " + std::to_string(n));

  std::vector<PreparedElement> prepared;
  for (const auto& m : c.elements) prepared.push_back(prepare(m));
  for (std::size_t i = 0; i + 1 < c.length(); ++i) {
    const bool sub = outgoing_subset(prepared[i], prepared[i + 1]);
    const bool back = outgoing_subset(prepared[i + 1], prepared[i]);
    r.add("strict inclusion " + std::to_string(i + 1) + "<" + std::to_string(i + 2), sub && !back,
          "subset=" + std::to_string(sub) + " reverse=" + std::to_string(back));
  }
  if (!c.strictness_witnesses.empty()) {
    r.add("witness count", c.strictness_witnesses.size() + 1 == c.length());
    for (std::size_t i = 0; i < c.strictness_witnesses.size() && i + 1 < c.length(); ++i) {
      const KMatrix& w = c.strictness_witnesses[i];
      const bool upper = is_bj_orthogonal(prepared[i + 1], w).orthogonal;
      const bool lower = is_bj_orthogonal(prepared[i], w).orthogonal;
      r.add("strictness witness " + std::to_string(i + 1), upper && !lower,
            "upper_perp=" + std::to_string(upper) + " lower_perp=" + std::to_string(lower));
    }
  }

  try {
    const ChainRepresentatives reps = simultaneous_chain_representatives(c);
    int bad = 0;
    for (bool ok : reps.equal_checks) bad += ok ? 0 : 1;
    r.add("representatives share outgoing neighborhoods", bad == 0, count_detail(bad, static_cast<int>(reps.equal_checks.size())));
    r.add("diagonality propagates", reps.diagonal_propagation);
    const KMatrix& top = c.elements.back();
    if (top.is_diagonal(1e-9 * top.frobenius_norm())) {
      const bool diag = std::all_of(reps.representatives.begin(), reps.representatives.end(),
                                    [](const KMatrix& m) { return m.is_diagonal(1e-9 * m.frobenius_norm()); });
      r.add("representatives diagonal", diag);
    }
  } catch (const Error& e) {
    r.add("simultaneous representatives", false, e.what());
  }
  return r;
}

SuiteReport run_lemma_suite(const SimpleAlgebra& alg, std::uint64_t seed, const std::optional<Chain>& fixture) {
  SuiteReport r;
  r.suite = "lemmas";
  Rng rng(derive_seed(seed, 0x1e));
  const std::size_t n = static_cast<std::size_t>(alg.n);

  int bad_len = 0, bad_dims = 0, bad_reps = 0, bad_trans = 0;
  std::vector<Chain> chains;
  for (int t = 0; t < 20; ++t) {
    Chain c = build_maximal_chain(random_matrix(alg, rng));
    if (c.length() != n) {
      ++bad_len;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (norm_attaining_space(c.elements[i]).dim() != i + 1) ++bad_dims;
    if (!simultaneous_chain_representatives(c).verified()) ++bad_reps;
    for (std::size_t i = 0; i + 2 < n; ++i)
      if (!outgoing_subset(c.elements[i], c.elements[i + 2])) ++bad_trans;
    chains.push_back(std::move(c));
  }
  r.add("chain length equals n", bad_len == 0, count_detail(bad_len, 20));
  r.add("dim M0(A_i) = i", bad_dims == 0);
  r.add("simultaneous representatives", bad_reps == 0);
  r.add("transitivity along chains", bad_trans == 0);

  // A_i perp B must imply A_{i+1} perp B.
  int violations = 0, premises = 0;
  for (const auto& c : chains) {
    for (std::size_t i = 0; i + 1 < c.length(); ++i) {
      const PreparedElement lo = prepare(c.elements[i]), hi = prepare(c.elements[i + 1]);
      for (int t = 0; t < 10; ++t) {
        const KMatrix b = make_orthogonal_to(c.elements[i], random_matrix(alg, rng));
        const auto v1 = is_bj_orthogonal(lo, b);
        if (!v1.orthogonal) continue;
        ++premises;
        const auto v2 = is_bj_orthogonal(hi, b);
        if (!v2.orthogonal && std::abs(v2.margin) >= 10.0 * tol::kOrth) ++violations;
      }
    }
    if (premises >= 200) break;
  }
  r.add("outgoing inclusion implies orthogonality", violations == 0,
        std::to_string(violations) + " violations over " + std::to_string(premises) + " premises");

  int bad_right = 0, bad_sym = 0, bad_left = 0;
  for (int t = 0; t < 10; ++t) {
    const KMatrix a = random_matrix(alg, rng);
    if (is_right_symmetric(a)) continue;
    const AsymmetryWitness w = right_asymmetry_witness(a);
    if (!w.b_perp_a.orthogonal || w.a_perp_b.orthogonal) ++bad_right;
  }
  for (int t = 0; t < 10; ++t) {
    const KMatrix u = (1.0 + t) * random_unitary(alg, rng);
    if (!is_right_symmetric(u)) ++bad_sym;
    const PreparedElement pu = prepare(u);
    for (int s = 0; s < 20; ++s) {
      const KMatrix b = random_orthogonal_from(u, rng);
      if (b.is_zero()) continue;
      if (is_bj_orthogonal(b, u).orthogonal && !is_bj_orthogonal(pu, b).orthogonal) ++bad_sym;
    }
  }
  if (n >= 2) {
    for (int t = 0; t < 10; ++t) {
      const AsymmetryWitness w = left_asymmetry_witness(random_matrix(alg, rng));
      if (!w.a_perp_b.orthogonal || w.b_perp_a.orthogonal) ++bad_left;
    }
  }
  r.add("right asymmetry witnesses", bad_right == 0, count_detail(bad_right, 10));
  r.add("multiples of unitaries are right-symmetric", bad_sym == 0);
  if (n >= 2) r.add("left asymmetry witnesses", bad_left == 0, count_detail(bad_left, 10));

  if (fixture) {
    const SuiteReport f = validate_chain(*fixture);
    for (const auto& c : f.checks) r.add("fixture: " + c.name, c.passed, c.detail);
  }
  return r;
}

SuiteReport run_classification_suite(const SimpleAlgebra& alg, std::uint64_t seed) {
  SuiteReport r;
  r.suite = "classification";
  for (std::uint64_t s = 0; s < 5; ++s) {
    const ClassificationResult c = classify(AlgebraSpec::simple(alg), 500, derive_seed(seed, s));
    std::ostringstream d;
    d << "case " << to_string(c.theorem_case) << ", n " << c.n;
    r.add("seed " + std::to_string(s), c.matches(alg), d.str());
  }
  return r;
}

SuiteReport run_oracle_suite(const SimpleAlgebra& alg, std::uint64_t seed, int pairs) {
  SuiteReport r;
  r.suite = "oracle";
  const OracleStats s = oracle_agreement(alg, pairs, seed);
  std::ostringstream d;
  d << s.agreements << "/" << s.pairs << " agree (" << 100.0 * s.agreement() << "%)";
  r.add("agreement >= 99.5%", s.agreement() >= 0.995, d.str());
  r.add("disagreements near the boundary", s.wide_disagreements == 0,
        "worst |margin| " + std::to_string(s.worst_disagreement_margin));
  return r;
}

}  // namespace bj::cli
