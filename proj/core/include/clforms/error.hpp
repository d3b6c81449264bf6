#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clforms {

enum class ErrorCode {
  NotPrimePower,
  Unsupported,
  CapExceeded,
  AmbientMismatch,
  ShapeMismatch,
  BadRank,
  BadIndices,
  BadParams,
  NonIntegerResult,
  OutOfScopeParams,
  PreconditionViolated,
  LengthMismatch,
  NotCL,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace clforms
