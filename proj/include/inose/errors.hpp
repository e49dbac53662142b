#pragma once

#include <stdexcept>
#include <string>

namespace inose {

// Every failure mode the library can signal. Codes below the "internal"
// line indicate bad input; the rest indicate a broken invariant (a bug).
enum class ErrorCode {
  DegenerateLegendre,
  IsomorphicFactors,
  NotOnPencil,
  ZeroPolynomial,
  DivisionByZeroPolynomial,
  ConstantSection,
  SelfIntersectionRequest,
  DegenerateSection,
  NegativeInput,
  LengthMismatch,
  InvalidSpec,
  // internal invariant violations
  SingularPoint,
  OddBranchParity,
  ComponentClassificationFailure,
  InternalInvariantViolation,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DegenerateLegendre: return "DegenerateLegendre";
    case ErrorCode::IsomorphicFactors: return "IsomorphicFactors";
    case ErrorCode::NotOnPencil: return "NotOnPencil";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::ConstantSection: return "ConstantSection";
    case ErrorCode::SelfIntersectionRequest: return "SelfIntersectionRequest";
    case ErrorCode::DegenerateSection: return "DegenerateSection";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::OddBranchParity: return "OddBranchParity";
    case ErrorCode::ComponentClassificationFailure: return "ComponentClassificationFailure";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

  bool internal() const {
    switch (code_) {
      case ErrorCode::SingularPoint:
      case ErrorCode::OddBranchParity:
      case ErrorCode::ComponentClassificationFailure:
      case ErrorCode::InternalInvariantViolation:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace inose
