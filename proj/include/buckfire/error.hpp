#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace buckfire {

enum class ErrorCode {
  InvalidTreeSpec,
  Disconnected,
  SelfLoop,
  DuplicateEdge,
  StartOutOfRange,
  VertexOutOfRange,
  MissingLevels,
  NotLoaded,
  CapExceeded,
  EmptyRun,
  TraceMismatch,
  MalformedBlockStructure,
  SingularMatrix,
  DimensionMismatch,
  LevelOutOfRange,
  ClosedFormUnavailable,
  Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure in a text input; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace buckfire
