#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperprob {

/// Failure categories raised by the library. Each maps to one named
/// precondition or validation failure.
enum class ErrorCode {
  NonFinite,
  RangeError,
  NotInGroup,
  NotInvertible,
  BasisMismatch,
  NotNormalized,
  NotDecomposable,
  InvalidDocument,
  WeightSumError,
  DuplicateAtomId,
  UnknownContextName,
  ZeroConditioningContext,
  DegenerateContext,
  CompatibleVariables,
  ZeroDenominator,
  MixedClassUnsupported,
  NotHyperbolicContext,
  NotDoubleStochastic,
  BasisNotOrthonormal,
  NotGUnitary,
  NotDecomposableOutput,
  InsufficientData,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperprob
