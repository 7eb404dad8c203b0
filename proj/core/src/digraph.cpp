#include "bj/digraph.hpp"

#include <algorithm>
#include <map>

#include "bj/error.hpp"
#include "bj/orthogonality.hpp"
#include "bj/random.hpp"

namespace bj {

namespace {

// A and B span the same F-line: |<A,B>| = |A||B| in the real Frobenius pairing, with a phase allowed for F = C.
bool same_line(const KMatrix& a, const KMatrix& b) {
  const KMatrix d1 = a - b, d2 = a + b;
  if (d1.frobenius_norm() < 1e-12 || d2.frobenius_norm() < 1e-12) return true;
  if (a.base_field() == BaseField::R) return false;
  // For F = C the phase of b relative to a is read off the largest entry.
  std::size_t best = 0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (a.entries()[i].abs() > a.entries()[best].abs()) best = i;
  const auto pa = a.entries()[best].as_complex(), pb = b.entries()[best].as_complex();
  if (std::abs(pb) < 1e-12) return false;
  return (a - b.scaled(pa / pb)).frobenius_norm() < 1e-12 * std::max(1.0, a.frobenius_norm());
}

}  // namespace

bool DigraphSample::has_edge(std::size_t i, std::size_t j) const {
  return std::binary_search(edges.begin(), edges.end(), std::pair{i, j});
}

DigraphSample build_digraph(const SimpleAlgebra& a, std::vector<KMatrix> vertices, std::uint64_t seed) {
  DigraphSample s;
  s.algebra = a;
  s.seed = seed;
  s.vertices = std::move(vertices);
  std::vector<std::optional<PreparedElement>> prepared;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    s.labels.push_back("v" + std::to_string(i));
    prepared.push_back(s.vertices[i].is_zero() ? std::nullopt : std::optional(prepare(s.vertices[i])));
  }
  for (std::size_t i = 0; i < s.vertices.size(); ++i)
    for (std::size_t j = 0; j < s.vertices.size(); ++j) {
      const bool edge = !prepared[i] || is_bj_orthogonal(*prepared[i], s.vertices[j]).orthogonal;
      if (edge) s.edges.emplace_back(i, j);
    }
  return s;
}

DigraphSample sample_digraph(const AlgebraSpec& algebra, int count, std::uint64_t seed, bool include_zero,
                             bool projective) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  const SimpleAlgebra a = algebra.as_simple();
  Rng rng(derive_seed(seed, 0xd16a));
  std::vector<KMatrix> vertices;
  if (include_zero) vertices.emplace_back(a);
  int drawn = 0;
  while (drawn < count) {
    KMatrix m = random_matrix(a, rng);
    if (projective) {
      m = (1.0 / m.frobenius_norm()) * m;
      const bool dup = std::any_of(vertices.begin(), vertices.end(), [&](const KMatrix& v) { return same_line(v, m); });
      if (dup) continue;
    }
    vertices.push_back(std::move(m));
    ++drawn;
  }
  return build_digraph(a, std::move(vertices), seed);
}

std::vector<std::vector<std::size_t>> reduced_classes(const DigraphSample& sample) {
  const std::size_t n = sample.vertices.size();
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n)), in(n, std::vector<bool>(n));
  for (const auto& [i, j] : sample.edges) {
    out[i][j] = true;
    in[j][i] = true;
  }
  std::map<std::pair<std::vector<bool>, std::vector<bool>>, std::size_t> index;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, fresh] = index.try_emplace({out[v], in[v]}, classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

}  // namespace bj
