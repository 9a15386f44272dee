#include "hyperprob/errors.hpp"

namespace hyperprob {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotDecomposable: return "NotDecomposable";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    case ErrorCode::WeightSumError: return "WeightSumError";
    case ErrorCode::DuplicateAtomId: return "DuplicateAtomId";
    case ErrorCode::UnknownContextName: return "UnknownContextName";
    case ErrorCode::ZeroConditioningContext: return "ZeroConditioningContext";
    case ErrorCode::DegenerateContext: return "DegenerateContext";
    case ErrorCode::CompatibleVariables: return "CompatibleVariables";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::MixedClassUnsupported: return "MixedClassUnsupported";
    case ErrorCode::NotHyperbolicContext: return "NotHyperbolicContext";
    case ErrorCode::NotDoubleStochastic: return "NotDoubleStochastic";
    case ErrorCode::BasisNotOrthonormal: return "BasisNotOrthonormal";
    case ErrorCode::NotGUnitary: return "NotGUnitary";
    case ErrorCode::NotDecomposableOutput: return "NotDecomposableOutput";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace hyperprob
