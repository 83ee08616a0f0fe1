#pragma once

#include <stdexcept>
#include <string>

namespace mwbis {

// Every failure the library reports carries one of these codes. The CLI maps
// the two exception classes below to process exit codes: rejected input
// (ValidationError) exits 2, a solver that cannot handle valid input
// (SolverError) exits 3.
enum class ErrorCode {
  // instance / input validation
  AsymmetricAdjacency,
  SelfLoop,
  NonPositiveBudget,
  NegativeWeight,
  VertexOutOfRange,
  NotATree,
  NotACycle,
  UnsortedInput,
  CrossingCrossEdges,
  MultiFaceLevel,
  NonConsecutiveLevelEdge,
  DegenerateLevel,
  ParseError,
  BadParams,
  // solver-side limits and misuse
  InstanceTooLarge,
  ProfileTooShort,
  BudgetGuardExceeded,
  CapacityGuardExceeded,
  TooLargeForExactCheck,
  BoundaryMismatch,
  IncompatibleSolver,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// The input violates a documented invariant and was rejected.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The input is valid but the solver cannot or will not process it
// (resource guards, size caps, incompatible solver/instance pairing).
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace mwbis
