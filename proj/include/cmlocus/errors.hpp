#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmlocus {

/// Machine-readable error categories. The CLI maps these onto exit codes.
enum class ErrorCode {
  Parse,            // malformed text input
  UndefinedName,    // session reference to an unknown object
  DivisionByZero,
  FieldMismatch,
  RingMismatch,
  RankMismatch,
  UnknownVariable,
  InvalidArgument,
  ImageNotContained,
  NotInSupport,
  ZeroModule,
  BudgetExceeded,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A text-level error. `offset` is a 0-based character offset into the parsed
/// string; line/column are 1-based and filled in by line-oriented readers.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& what, std::size_t offset,
             std::size_t line = 0, std::size_t column = 0)
      : Error(code, what), offset_(offset), line_(line), column_(column) {}
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cmlocus
