#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abcvote {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ballot profile violates its structural invariants.
class MalformedProfile : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition failed (k > m, wrong committee size, bad level, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Fixture or reduction parameters outside the construction's admissible range.
class ConstraintViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace abcvote
