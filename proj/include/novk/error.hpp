#pragma once

#include <stdexcept>
#include <string>

namespace novk {

enum class ErrKind {
  TruncationIncrease,
  RingMismatch,
  DivisionByZero,
  NonUnitLeadingTerm,
  CosetLimitExceeded,
  BudgetExceeded,
  HypothesisViolation,
  OutOfScope,
  IndexError,
  GroupMismatch,
  UnresolvedId,
  WindowTooShort,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrKind k);

// Single exception type for all domain errors; the kind is what tests and
// the CLI dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace novk
