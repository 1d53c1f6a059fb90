#include "acq/error.hpp"

namespace acq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::parse: return "parse";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorKind::parse,
            line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace acq
