#include "mwbis/errors.hpp"

namespace mwbis {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NonPositiveBudget: return "NonPositiveBudget";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::UnsortedInput: return "UnsortedInput";
    case ErrorCode::CrossingCrossEdges: return "CrossingCrossEdges";
    case ErrorCode::MultiFaceLevel: return "MultiFaceLevel";
    case ErrorCode::NonConsecutiveLevelEdge: return "NonConsecutiveLevelEdge";
    case ErrorCode::DegenerateLevel: return "DegenerateLevel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::ProfileTooShort: return "ProfileTooShort";
    case ErrorCode::BudgetGuardExceeded: return "BudgetGuardExceeded";
    case ErrorCode::CapacityGuardExceeded: return "CapacityGuardExceeded";
    case ErrorCode::TooLargeForExactCheck: return "TooLargeForExactCheck";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::IncompatibleSolver: return "IncompatibleSolver";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace mwbis
