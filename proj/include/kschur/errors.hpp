#pragma once

#include <stdexcept>
#include <string>

namespace kschur {

/// Malformed textual input (partition brackets, numbers, schemas).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition. The message names the
/// violated condition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (two computation routes disagree,
/// a matrix that must be unitriangular is not, ...). Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail_precondition(const std::string& what) {
  throw PreconditionError(what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace kschur
