#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dreidel {

enum class ErrorCode {
  kInvalidArgument,
  kDivisionByZero,
  kEmptyDomain,
  kSingular,
  kNoConvergence,
  kInconsistent,
  kMissingValue,
  kSpinCapExceeded,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. The code lets callers
/// (the CLI in particular) map failures to exit statuses without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dreidel
