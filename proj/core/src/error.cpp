// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "conicmod/error.hpp"

namespace conicmod {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::EvenArgument: return "EvenArgument";
    case ErrorCode::UnsupportedCongruenceClass: return "UnsupportedCongruenceClass";
    case ErrorCode::OracleScaleExceeded: return "OracleScaleExceeded";
    case ErrorCode::DegenerateCoefficient: return "DegenerateCoefficient";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::ExcludedValue: return "ExcludedValue";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnsupportedTau: return "UnsupportedTau";
    case ErrorCode::NonConvergentTau: return "NonConvergentTau";
  }
  return "UnknownError";
}

}  // namespace conicmod
