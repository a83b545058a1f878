#include "urr/errors.hpp"

namespace urr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::PointNotOnVariety: return "PointNotOnVariety";
    case ErrorKind::DimOfUnitIdeal: return "DimOfUnitIdeal";
    case ErrorKind::ExhaustedTries: return "ExhaustedTries";
    case ErrorKind::PropertyCheckFailed: return "PropertyCheckFailed";
    case ErrorKind::PremiseCertMissing: return "PremiseCertMissing";
    case ErrorKind::DescentFailed: return "DescentFailed";
    case ErrorKind::NotSmoothAtPoint: return "NotSmoothAtPoint";
    case ErrorKind::NotRegularAtPoint: return "NotRegularAtPoint";
    case ErrorKind::CompositionUndefined: return "CompositionUndefined";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

namespace {

std::string locate(const std::string& what, std::size_t column, std::size_t line) {
  std::string out = what + " at ";
  if (line > 0) out += "line " + std::to_string(line) + ", ";
  return out + "column " + std::to_string(column);
}

}  // namespace

SyntaxError::SyntaxError(const std::string& what, std::size_t column, std::size_t line)
    : Error(ErrorKind::Syntax, locate(what, column, line)),
      column_(column),
      line_(line),
      message_(what) {}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace urr
