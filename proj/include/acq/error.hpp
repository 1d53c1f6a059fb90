#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace acq {

// Failure categories. The CLI maps each kind to an exit code and to the
// `error: <kind>:` prefix on standard error.
enum class ErrorKind {
  invalid_argument,
  parse,
  precondition,
  capacity,
  io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  // 1-based; 0 when the error is not tied to a line (e.g. empty document).
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace acq
