#include "bj/algebra.hpp"

#include "bj/error.hpp"

namespace bj {

SimpleAlgebra AlgebraSpec::as_simple() const {
  if (!is_simple()) throw Error(ErrorCode::NotSimple, "algebra has " + std::to_string(blocks.size()) + " blocks");
  return {blocks.front().division_algebra, base_field, blocks.front().n};
}

int AlgebraSpec::dimension() const {
  int real = 0;
  for (const auto& b : blocks) real += b.n * b.n * real_dim(b.division_algebra);
  return real / real_dim(base_field);
}

int AlgebraSpec::total_size() const {
  int total = 0;
  for (const auto& b : blocks) total += b.n;
  return total;
}

void AlgebraSpec::validate() const {
  if (blocks.empty()) throw Error(ErrorCode::InvalidArgument, "algebra needs at least one block");
  for (const auto& b : blocks) {
    if (b.n < 1) throw Error(ErrorCode::InvalidArgument, "block size must be positive");
    if (base_field == BaseField::C && b.division_algebra != DivisionAlgebra::C)
      throw Error(ErrorCode::InvalidArgument, "complex base field needs complex blocks");
  }
}

}  // namespace bj
