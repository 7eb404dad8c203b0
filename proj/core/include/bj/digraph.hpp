#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bj/algebra.hpp"
#include "bj/kmatrix.hpp"

namespace bj {

/// Finite induced subgraph of the ortho-digraph: edge i -> j iff vertices[i] is BJ orthogonal to vertices[j].
struct DigraphSample {
  SimpleAlgebra algebra;
  std::vector<std::string> labels;
  std::vector<KMatrix> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::uint64_t seed = 0;

  bool has_edge(std::size_t i, std::size_t j) const;
};

/// Edges over the given vertices, labelled v0, v1, ...
DigraphSample build_digraph(const SimpleAlgebra& a, std::vector<KMatrix> vertices, std::uint64_t seed = 0);

/// `count` Gaussian elements, preceded by the zero matrix when include_zero is set.
/// Projective mode normalizes each draw and skips draws that are F-multiples of earlier ones.
/// Throws NotSimple for multi-block specs and InvalidArgument for count < 1.
DigraphSample sample_digraph(const AlgebraSpec& algebra, int count, std::uint64_t seed, bool include_zero = false,
                             bool projective = false);

/// Vertices grouped by equal incoming and outgoing neighborhoods within the sample, in order of first appearance.
std::vector<std::vector<std::size_t>> reduced_classes(const DigraphSample& sample);

}  // namespace bj
