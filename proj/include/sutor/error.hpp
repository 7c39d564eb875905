#pragma once

#include <stdexcept>
#include <string>

namespace sutor {

enum class ErrorCode {
  Syntax,
  UnknownGenerator,
  AlphabetMismatch,
  GroupMismatch,
  NotSquare,
  UnsupportedTorsion,
  ZeroInput,
  EmptySupport,
  DimensionMismatch,
  Index,
  NameCollision,
  MalformedPd,
  MultiComponent,
  BadParameter,
  Validation,
  Io,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::UnknownGenerator: return "UNKNOWN_GENERATOR";
    case ErrorCode::AlphabetMismatch: return "ALPHABET_MISMATCH";
    case ErrorCode::GroupMismatch: return "GROUP_MISMATCH";
    case ErrorCode::NotSquare: return "NOT_SQUARE";
    case ErrorCode::UnsupportedTorsion: return "UNSUPPORTED_TORSION";
    case ErrorCode::ZeroInput: return "ZERO_INPUT";
    case ErrorCode::EmptySupport: return "EMPTY_SUPPORT";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::Index: return "INDEX";
    case ErrorCode::NameCollision: return "NAME_COLLISION";
    case ErrorCode::MalformedPd: return "MALFORMED_PD";
    case ErrorCode::MultiComponent: return "MULTI_COMPONENT";
    case ErrorCode::BadParameter: return "BAD_PARAMETER";
    case ErrorCode::Validation: return "VALIDATION";
    case ErrorCode::Io: return "IO";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the 0-based column where it was detected.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::Syntax, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sutor
