#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permlex {

enum class ErrorCode {
  kPrefixTooShort,
  kLimitExceeded,
  kInvalidDirective,
  kInvalidMorphism,
  kInvalidWord,
  kParseError,
  kHorizonExhausted,
  kNotSaturated,
  kUnsaturated,
  kLengthTooSmall,
  kLengthMismatch,
  kWrongSource,
  kClassMissing,
  kPrecondition,
  kDomainError,
  kInvalidPermutation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace permlex
