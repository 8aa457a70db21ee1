#include "dreidel/error.hpp"

namespace dreidel {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kDivisionByZero: return "division by zero";
    case ErrorCode::kEmptyDomain: return "empty domain";
    case ErrorCode::kSingular: return "singular system";
    case ErrorCode::kNoConvergence: return "no convergence";
    case ErrorCode::kInconsistent: return "inconsistent system";
    case ErrorCode::kMissingValue: return "missing value";
    case ErrorCode::kSpinCapExceeded: return "spin cap exceeded";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

}  // namespace dreidel
