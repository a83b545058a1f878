#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace urr {

enum class ErrorKind {
  Syntax,
  UnknownVariable,
  ArityMismatch,
  SingularMatrix,
  LimitExceeded,
  PreconditionViolated,
  PointNotOnVariety,
  DimOfUnitIdeal,
  ExhaustedTries,
  PropertyCheckFailed,
  PremiseCertMissing,
  DescentFailed,
  NotSmoothAtPoint,
  NotRegularAtPoint,
  CompositionUndefined,
  VersionMismatch,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry a 1-based line/column; line is 0 for single-line input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t column, std::size_t line = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t column_;
  std::size_t line_;
  std::string message_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace urr
