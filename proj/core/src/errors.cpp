#include "qm/errors.hpp"

namespace qm {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::Parity: return "ParityError";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::SolveFailure: return "SolveFailure";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ExplosionGuard: return "ExplosionGuard";
    case ErrorCode::NotConjugateClosed: return "NotConjugateClosed";
    case ErrorCode::DivisibleInput: return "DivisibleInput";
    case ErrorCode::ProbeDegenerate: return "ProbeDegenerate";
    case ErrorCode::OffSurface: return "OffSurface";
    case ErrorCode::NotHarmonic: return "NotHarmonic";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::RankIndeterminate: return "RankIndeterminate";
    case ErrorCode::RankDeficiency: return "RankDeficiency";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, double value)
    : std::runtime_error(message), code_(code), value_(value) {}

SyntaxError::SyntaxError(const std::string& message, std::size_t offset)
    : Error(ErrorCode::Syntax, message + " at byte " + std::to_string(offset),
            static_cast<double>(offset)),
      offset_(offset) {}

}  // namespace qm
