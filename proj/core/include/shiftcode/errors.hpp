#pragma once

#include <stdexcept>
#include <string>

namespace shiftcode {

/// Failure categories surfaced by the library.  The CLI maps these onto
/// distinct exit codes.
enum class ErrorKind {
  kInvalidInput,
  kPrecisionExceeded,
  kBudgetExceeded,
  kResolutionExceeded,
  kUndecided,
  kNotInCover,
  kHypothesisViolation,
  kInconsistentTree,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kPrecisionExceeded: return "PrecisionExceeded";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kResolutionExceeded: return "ResolutionExceeded";
    case ErrorKind::kUndecided: return "Undecided";
    case ErrorKind::kNotInCover: return "NotInCover";
    case ErrorKind::kHypothesisViolation: return "HypothesisViolation";
    case ErrorKind::kInconsistentTree: return "InconsistentTree";
  }
  return "Unknown";
}

}  // namespace shiftcode
