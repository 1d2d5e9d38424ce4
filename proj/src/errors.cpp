#include "irrstrat/errors.hpp"

namespace irrstrat {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InvalidRootSystem: return "InvalidRootSystem";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotRelevant: return "NotRelevant";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::Twisted: return "Twisted";
    case ErrorCode::LeadingNotRegular: return "LeadingNotRegular";
    case ErrorCode::NotSplitOverField: return "NotSplitOverField";
    case ErrorCode::NotIdentityModZ: return "NotIdentityModZ";
    case ErrorCode::OrderTooLow: return "OrderTooLow";
    case ErrorCode::ZeroPair: return "ZeroPair";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotInXn: return "NotInXn";
    case ErrorCode::NotInUpperHalfPlane: return "NotInUpperHalfPlane";
    case ErrorCode::NotInSL2Z: return "NotInSL2Z";
  }
  return "Unknown";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput:
      return ErrorCategory::Malformed;
    case ErrorCode::TooLarge:
    case ErrorCode::PrecisionExhausted:
    case ErrorCode::SearchExhausted:
      return ErrorCategory::ResourceGuard;
    default:
      return ErrorCategory::Precondition;
  }
}

}  // namespace irrstrat
