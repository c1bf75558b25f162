#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpa {

enum class ErrorCode {
  DimensionMismatch,
  NotSquare,
  NotAnEigenvalue,
  InvalidAlgebra,
  NotAnIdeal,
  NotARepresentation,
  BadParameters,
  NotACPA,
  NotATwoSidedIdeal,
  NotComplete,
  UnsupportedSpectrum,
  QuotientNotAbelian,
  NotACocycle,
  NotCentralInI,
  NotCommonEigenvector,
  NotSolvable,
  IsPerfect,
  TrivialCenter,
  Format,
};

std::string_view to_string(ErrorCode code);

/// Precondition failure of a library operation. The code identifies the
/// violated contract; the message carries the offending detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cpa
