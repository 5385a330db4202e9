#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace classaut {

enum class ErrorCode {
  kUnknownGenerator,
  kSyntaxError,
  kDuplicateName,
  kEnumerationLimit,
  kOrderMismatch,
  kNotNormal,
  kNotNilpotent,
  kNotPrimePower,
  kNotAbelian,
  kTooLarge,
  kAbelianInput,
  kClassTooHigh,
  kBadSubgroup,
  kHypothesisFail,
  kConsistencyFail,
  kIoError,
  kNotFound,
  kBadInvariants,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
// Parse errors additionally carry a byte offset (within the word) and/or a
// 1-based line number (within a catalog file).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  // The text without the code prefix.
  const std::string& message() const noexcept { return message_; }

  Error& at_offset(std::size_t offset);
  Error& at_line(std::size_t line);

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> offset_;
  std::optional<std::size_t> line_;
};

}  // namespace classaut
