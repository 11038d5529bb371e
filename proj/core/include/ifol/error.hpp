#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ifol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexing or parsing failure. `position` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// An abstraction whose alpha/beta lists do not partition the body's free variables.
class AbstractionError : public Error {
 public:
  using Error::Error;
};

class CaptureError : public Error {
 public:
  using Error::Error;
};

/// Missing or unbound variable in an assignment.
class AssignmentError : public Error {
 public:
  using Error::Error;
};

/// A reference to something the world (or domain) does not define.
class DomainError : public Error {
 public:
  using Error::Error;
};

class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace ifol
