#include "galois/error.hpp"

namespace galois {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::ZeroDiscriminant: return "ZeroDiscriminant";
    case ErrorCode::LeadingCoeffVanishes: return "LeadingCoeffVanishes";
    case ErrorCode::NotSquarefreeMod: return "NotSquarefreeMod";
    case ErrorCode::UnsupportedR: return "UnsupportedR";
    case ErrorCode::OutOfCoverage: return "OutOfCoverage";
    case ErrorCode::NoConjugationWitness: return "NoConjugationWitness";
    case ErrorCode::EmptyCandidates: return "EmptyCandidates";
    case ErrorCode::DatabaseError: return "DatabaseError";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NonPrimeDegree: return "NonPrimeDegree";
    case ErrorCode::NoNonrealRoots: return "NoNonrealRoots";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::IrreducibilityUnknown: return "IrreducibilityUnknown";
    case ErrorCode::DegenerateT: return "DegenerateT";
    case ErrorCode::ZeroM: return "ZeroM";
  }
  return "UnknownError";
}

bool is_input_rejection(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoConjugationWitness:
    case ErrorCode::EmptyCandidates:
    case ErrorCode::DatabaseError:
    case ErrorCode::ParityViolation:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, std::string expected)
    : Error(ErrorCode::SyntaxError,
            "at position " + std::to_string(position) + ", expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace galois
