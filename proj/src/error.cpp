#include "permlex/error.hpp"

namespace permlex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPrefixTooShort: return "PrefixTooShort";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kInvalidDirective: return "InvalidDirective";
    case ErrorCode::kInvalidMorphism: return "InvalidMorphism";
    case ErrorCode::kInvalidWord: return "InvalidWord";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kHorizonExhausted: return "HorizonExhausted";
    case ErrorCode::kNotSaturated: return "NotSaturated";
    case ErrorCode::kUnsaturated: return "Unsaturated";
    case ErrorCode::kLengthTooSmall: return "LengthTooSmall";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kWrongSource: return "WrongSource";
    case ErrorCode::kClassMissing: return "ClassMissing";
    case ErrorCode::kPrecondition: return "PreconditionViolation";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace permlex
