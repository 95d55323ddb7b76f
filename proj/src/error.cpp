#include "khof/error.hpp"

namespace khof {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DanglingArc: return "DanglingArc";
    case ErrorKind::InconsistentCycle: return "InconsistentCycle";
    case ErrorKind::BadSign: return "BadSign";
    case ErrorKind::BadBasepoint: return "BadBasepoint";
    case ErrorKind::ComponentOutOfRange: return "ComponentOutOfRange";
    case ErrorKind::NotAForest: return "NotAForest";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CrossingBudgetExceeded: return "CrossingBudgetExceeded";
    case ErrorKind::ComponentCountMismatch: return "ComponentCountMismatch";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::RequiresMAtLeast4: return "RequiresMAtLeast4";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace khof
