#include "clforms/error.hpp"

namespace clforms {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::OutOfScopeParams: return "OutOfScopeParams";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotCL: return "NotCL";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace clforms
