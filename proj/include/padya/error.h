#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padya {

enum class ErrorCode {
  kUnknownCodepoint,
  kEmptyInput,
  kUnmappedCapital,
  kUnknownGlyph,
  kNoVowel,
  kUnresolvedOptional,
  kIncompleteResolution,
  kParseError,
  kDuplicateEntry,
  kPatternLengthMismatch,
  kEmptyCatalogView,
  kIoError,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library. `position` is a byte offset for
// codec errors, a line number for catalog errors, and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t position = 0)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace padya
