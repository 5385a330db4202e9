#include "classaut/error.hpp"

namespace classaut {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownGenerator: return "UNKNOWN_GENERATOR";
    case ErrorCode::kSyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::kDuplicateName: return "DUPLICATE_NAME";
    case ErrorCode::kEnumerationLimit: return "ENUMERATION_LIMIT";
    case ErrorCode::kOrderMismatch: return "ORDER_MISMATCH";
    case ErrorCode::kNotNormal: return "NOT_NORMAL";
    case ErrorCode::kNotNilpotent: return "NOT_NILPOTENT";
    case ErrorCode::kNotPrimePower: return "NOT_PRIME_POWER";
    case ErrorCode::kNotAbelian: return "NOT_ABELIAN";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
    case ErrorCode::kAbelianInput: return "ABELIAN_INPUT";
    case ErrorCode::kClassTooHigh: return "CLASS_TOO_HIGH";
    case ErrorCode::kBadSubgroup: return "BAD_SUBGROUP";
    case ErrorCode::kHypothesisFail: return "HYPOTHESIS_FAIL";
    case ErrorCode::kConsistencyFail: return "CONSISTENCY_FAIL";
    case ErrorCode::kIoError: return "IO_ERROR";
    case ErrorCode::kNotFound: return "NOT_FOUND";
    case ErrorCode::kBadInvariants: return "BAD_INVARIANTS";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

Error& Error::at_offset(std::size_t offset) {
  offset_ = offset;
  return *this;
}

Error& Error::at_line(std::size_t line) {
  line_ = line;
  return *this;
}

}  // namespace classaut
