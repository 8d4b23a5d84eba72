#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsym {

enum class ErrorKind {
  DomainError,
  NotOdd,
  Overflow,
  NegativeArgument,
  PlanInfeasible,
  BudgetExceeded,
  ParityViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// PlanInfeasible and BudgetExceeded: the inputs are valid but the
  /// requested accuracy or enumeration does not fit the configured caps.
  bool is_numeric() const noexcept {
    return kind_ == ErrorKind::PlanInfeasible || kind_ == ErrorKind::BudgetExceeded;
  }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NegativeArgument: return "NegativeArgument";
    case ErrorKind::PlanInfeasible: return "PlanInfeasible";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParityViolation: return "ParityViolation";
  }
  return "Unknown";
}

}  // namespace qsym
