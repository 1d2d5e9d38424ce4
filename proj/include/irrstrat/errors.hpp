#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irrstrat {

/// Every library failure carries one of these codes. The CLI reports the
/// code's name verbatim, so the names are part of the external interface.
enum class ErrorCode {
  MalformedInput,
  DivisionByZero,
  DimensionMismatch,
  VariableMismatch,
  IndexOutOfRange,
  NotAUnit,
  NotInvertible,
  PrecisionExhausted,
  BadModulus,
  Unsupported,
  InvalidRootSystem,
  TooLarge,
  OutOfRange,
  NotRelevant,
  SearchExhausted,
  Twisted,
  LeadingNotRegular,
  NotSplitOverField,
  NotIdentityModZ,
  OrderTooLow,
  ZeroPair,
  ShapeMismatch,
  NotRegular,
  NotInXn,
  NotInUpperHalfPlane,
  NotInSL2Z,
};

enum class ErrorCategory { Malformed, Precondition, ResourceGuard };

std::string_view error_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace irrstrat
