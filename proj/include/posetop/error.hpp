#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posetop {

enum class ErrorKind {
  DuplicateLabel,
  UnknownLabel,
  CycleDetected,
  ArityMismatch,
  EnumerationGuard,
  IndexOutOfRange,
  ModeMismatch,
  MissingProvenance,
  UnknownIdentity,
  DivergentParameter,
  PrecisionUnachievable,
  SyntaxError,
  ArityError,
  UnknownName,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::EnumerationGuard: return "EnumerationGuard";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::MissingProvenance: return "MissingProvenance";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::DivergentParameter: return "DivergentParameter";
    case ErrorKind::PrecisionUnachievable: return "PrecisionUnachievable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures from the expression language, positioned 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace posetop
