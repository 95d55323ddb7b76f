#pragma once

#include <stdexcept>
#include <string>

namespace khof {

enum class ErrorKind {
  DanglingArc,
  InconsistentCycle,
  BadSign,
  BadBasepoint,
  ComponentOutOfRange,
  NotAForest,
  BadParameters,
  VariableMismatch,
  NotDivisible,
  ParseError,
  CrossingBudgetExceeded,
  ComponentCountMismatch,
  EmptySelection,
  NotASolution,
  RequiresMAtLeast4,
  BudgetExceeded,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace khof
