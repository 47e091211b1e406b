#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tripack {

// Input text could not be understood. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument claimed to be a partition is not one (bad cover, bad ids).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The instance exceeds a desk-scale budget (vertex or triangle caps).
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that is supposed to be unconditionally true failed.
// Seeing one of these means the implementation is wrong, not the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tripack
