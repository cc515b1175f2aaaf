// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conicmod {

enum class ErrorCode {
  NotPrime,
  ModulusTooLarge,
  NotInvertible,
  BasisMismatch,
  EvenModulus,
  EvenArgument,
  UnsupportedCongruenceClass,
  OracleScaleExceeded,
  DegenerateCoefficient,
  NotOnCurve,
  CurveMismatch,
  NotFound,
  ExcludedValue,
  OutOfRange,
  UnsupportedTau,
  NonConvergentTau,
};

std::string_view to_string(ErrorCode code) noexcept;

// Raised when an input lies outside the domain of an operation. Internal
// invariant violations are reported with std::logic_error instead.
class DomainError : public std::invalid_argument {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conicmod
