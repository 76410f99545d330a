#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace galois {

enum class ErrorCode {
  // polynomial text
  SyntaxError,
  ZeroPolynomial,
  UnknownVariable,
  // arithmetic preconditions
  DegreeZero,
  PreconditionViolated,
  NotSquarefree,
  ZeroDiscriminant,
  // prime fields
  LeadingCoeffVanishes,
  NotSquarefreeMod,
  // group database and sieve
  UnsupportedR,
  OutOfCoverage,
  NoConjugationWitness,
  EmptyCandidates,
  DatabaseError,
  ParityViolation,
  // engine
  NonPrimeDegree,
  NoNonrealRoots,
  NotIrreducible,
  IrreducibilityUnknown,
  DegenerateT,
  ZeroM,
};

std::string_view to_string(ErrorCode code);

/// True for errors caused by the caller's input (CLI exit code 2); false for
/// violated internal invariants (exit code 3).
bool is_input_rejection(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace galois
