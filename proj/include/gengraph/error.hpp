#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gengraph {

enum class ErrorCode {
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  BadParameter,
  TooLarge,
  NotNormal,
  TrivialGroup,
  NotGeneratingModuloN,
  QuotientNotTwoGenerated,
  NotTwoGenerated,
  NotAbelianMinimalNormal,
  BadVertex,
  MalformedRotation,
  InputPlanar,
  SyntaxError,
  UnknownFamily,
  Io,
  InvariantViolated,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::NotGeneratingModuloN: return "NotGeneratingModuloN";
    case ErrorCode::QuotientNotTwoGenerated: return "QuotientNotTwoGenerated";
    case ErrorCode::NotTwoGenerated: return "NotTwoGenerated";
    case ErrorCode::NotAbelianMinimalNormal: return "NotAbelianMinimalNormal";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::MalformedRotation: return "MalformedRotation";
    case ErrorCode::InputPlanar: return "InputPlanar";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::Io: return "Io";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

/// Single exception type for the library. `code()` identifies the failure;
/// `row()` is set when the failure can be pinned to a row of an input table
/// (file readers use it to report line numbers).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> row = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message),
        row_(row) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> row() const noexcept { return row_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> row_;
};

}  // namespace gengraph
