#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bj/kmatrix.hpp"
#include "bj/orthograph.hpp"
#include "bj/random.hpp"

namespace bj::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
  nlohmann::json to_json() const;
  nlohmann::json failures() const;
};

/// Random B with B perp A: B attains its norm only at a random u, and Bu is orthogonal to Au.
KMatrix random_orthogonal_from(const KMatrix& a, Rng& rng);

/// B - alpha A with alpha chosen so that <Au, (B - alpha A)u>_F = 0 for the top frame vector u; then A perp result.
KMatrix make_orthogonal_to(const KMatrix& a, const KMatrix& b);

/// A with top singular value of random multiplicity, and B either Gaussian or pushed onto A^perp.
struct OraclePair {
  KMatrix a;
  KMatrix b;
};
OraclePair random_oracle_pair(const SimpleAlgebra& alg, Rng& rng);

struct OracleStats {
  int pairs = 0;
  int agreements = 0;
  int wide_disagreements = 0;
  double worst_disagreement_margin = 0.0;

  double agreement() const { return pairs == 0 ? 1.0 : static_cast<double>(agreements) / pairs; }
};
OracleStats oracle_agreement(const SimpleAlgebra& alg, int pairs, std::uint64_t seed);

/// Strict increase along the chain, strictness witnesses, length n and the simultaneous representatives.
SuiteReport validate_chain(const Chain& c);

SuiteReport run_lemma_suite(const SimpleAlgebra& alg, std::uint64_t seed, const std::optional<Chain>& fixture);
SuiteReport run_classification_suite(const SimpleAlgebra& alg, std::uint64_t seed);
SuiteReport run_oracle_suite(const SimpleAlgebra& alg, std::uint64_t seed, int pairs);

}  // namespace bj::cli
