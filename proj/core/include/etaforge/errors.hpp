#pragma once

#include <stdexcept>
#include <string>

namespace etaforge {

// Machine-readable reason attached to every domain failure.  CLI maps any
// DomainError to exit code 1; usage problems are a separate category.
enum class ErrorCode {
  NotKStrict,
  BadType,
  BothLeft,
  BothRight,
  ExpansionBudgetExceeded,
  BudgetExceeded,
  NoPartEqualK,
  NotStrict,
  NonIntegralDivision,
  NotSymmetric,
  InsufficientVariables,
  NonZeroResidual,
  PathDisagreement,
  NotAStrip,
  DoesNotFit,
  NotReduced,
  NotChainCompatible,
  VarMismatch,
  ParseError,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotKStrict: return "NotKStrict";
    case ErrorCode::BadType: return "BadType";
    case ErrorCode::BothLeft: return "BothLeft";
    case ErrorCode::BothRight: return "BothRight";
    case ErrorCode::ExpansionBudgetExceeded: return "ExpansionBudgetExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoPartEqualK: return "NoPartEqualK";
    case ErrorCode::NotStrict: return "NotStrict";
    case ErrorCode::NonIntegralDivision: return "NonIntegralDivision";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::InsufficientVariables: return "InsufficientVariables";
    case ErrorCode::NonZeroResidual: return "NonZeroResidual";
    case ErrorCode::PathDisagreement: return "PathDisagreement";
    case ErrorCode::NotAStrip: return "NotAStrip";
    case ErrorCode::DoesNotFit: return "DoesNotFit";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotChainCompatible: return "NotChainCompatible";
    case ErrorCode::VarMismatch: return "VarMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw DomainError(code, msg);
}

// Invariants that signal an implementation bug rather than bad input.
inline void hard_assert(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(ErrorCode::Internal, msg);
}

}  // namespace etaforge
