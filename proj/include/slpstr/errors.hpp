#pragma once

#include <stdexcept>
#include <string>

namespace slpstr {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Grammar file / structure problems.
struct SyntaxError : Error {
  explicit SyntaxError(const std::string& msg) : Error(msg) {}
};
struct ForwardReferenceError : Error {
  explicit ForwardReferenceError(const std::string& msg) : Error(msg) {}
};
struct MissingRootError : Error {
  explicit MissingRootError(const std::string& msg) : Error(msg) {}
};

// Operation preconditions.
struct OutOfRangeError : Error {
  explicit OutOfRangeError(const std::string& msg) : Error(msg) {}
};
struct EmptyIntervalError : Error {
  explicit EmptyIntervalError(const std::string& msg) : Error(msg) {}
};
struct BadParamsError : Error {
  explicit BadParamsError(const std::string& msg) : Error(msg) {}
};
struct MalformedListError : Error {
  explicit MalformedListError(const std::string& msg) : Error(msg) {}
};
struct IntervalTooWideError : Error {
  explicit IntervalTooWideError(const std::string& msg) : Error(msg) {}
};
struct LengthMismatchError : Error {
  explicit LengthMismatchError(const std::string& msg) : Error(msg) {}
};

// Expansion refused; carries the exact generated length.
struct TooLongError : Error {
  TooLongError(const std::string& msg, std::string length_decimal)
      : Error(msg), length(std::move(length_decimal)) {}
  std::string length;
};

// A structural guarantee the algorithms rely on was violated; always a bug.
struct InvariantError : Error {
  explicit InvariantError(const std::string& msg) : Error(msg) {}
};

#define SLPSTR_CHECK(cond, msg)          \
  do {                                   \
    if (!(cond)) {                       \
      throw ::slpstr::InvariantError(msg); \
    }                                    \
  } while (0)

}  // namespace slpstr
