#include "padya/error.h"

namespace padya {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownCodepoint: return "UnknownCodepoint";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kUnmappedCapital: return "UnmappedCapital";
    case ErrorCode::kUnknownGlyph: return "UnknownGlyph";
    case ErrorCode::kNoVowel: return "NoVowel";
    case ErrorCode::kUnresolvedOptional: return "UnresolvedOptional";
    case ErrorCode::kIncompleteResolution: return "IncompleteResolution";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateEntry: return "DuplicateEntry";
    case ErrorCode::kPatternLengthMismatch: return "PatternLengthMismatch";
    case ErrorCode::kEmptyCatalogView: return "EmptyCatalogView";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace padya
