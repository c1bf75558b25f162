#include "cpa/error.hpp"

namespace cpa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotARepresentation: return "NotARepresentation";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotACPA: return "NotACPA";
    case ErrorCode::NotATwoSidedIdeal: return "NotATwoSidedIdeal";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::UnsupportedSpectrum: return "UnsupportedSpectrum";
    case ErrorCode::QuotientNotAbelian: return "QuotientNotAbelian";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotCentralInI: return "NotCentralInI";
    case ErrorCode::NotCommonEigenvector: return "NotCommonEigenvector";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::IsPerfect: return "IsPerfect";
    case ErrorCode::TrivialCenter: return "TrivialCenter";
    case ErrorCode::Format: return "Format";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace cpa
