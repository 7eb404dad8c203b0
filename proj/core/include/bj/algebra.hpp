#pragma once

#include <vector>

#include "bj/kmatrix.hpp"
#include "bj/scalar.hpp"

namespace bj {

struct AlgebraBlock {
  DivisionAlgebra division_algebra = DivisionAlgebra::R;
  int n = 1;

  friend bool operator==(const AlgebraBlock&, const AlgebraBlock&) = default;
};

/// Finite-dimensional C*-algebra M_{n1}(K1) + ... + M_{nl}(Kl) over F.
struct AlgebraSpec {
  BaseField base_field = BaseField::R;
  std::vector<AlgebraBlock> blocks;

  static AlgebraSpec simple(const SimpleAlgebra& a) { return {a.base_field, {{a.division_algebra, a.n}}}; }

  bool is_simple() const { return blocks.size() == 1; }
  /// The single block as a SimpleAlgebra. Throws NotSimple for multi-block specs.
  SimpleAlgebra as_simple() const;
  /// Dimension over the base field: sum of n_i^2 dim_R(K_i) / dim_R(F).
  int dimension() const;
  /// Sum of block sizes.
  int total_size() const;
  /// Throws InvalidArgument on an empty block list, n < 1, or F = C with a non-complex block.
  void validate() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

}  // namespace bj
