#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bj {

enum class ErrorCode {
  NonSymmetricInput,
  ZeroMatrix,
  FieldMismatch,
  AlgebraMismatch,
  ZeroDirection,
  UnitaryInput,
  DimensionTooSmall,
  NotMaximalChain,
  ChainTooShort,
  NotSimpleFiniteDimensional,
  NotSimple,
  DimensionOne,
  FieldNotComplex,
  BlockMismatch,
  InvalidArgument,
  CertificationFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bj
