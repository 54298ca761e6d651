#pragma once

#include <stdexcept>
#include <string>

namespace gsb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed an argument outside the operation's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed code or family file. Carries the 1-based line that failed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An enumeration would exceed its configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Attack parameters cannot be made integral/consistent for this (n, L, R, eps).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A randomized construction could not produce a usable object.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A guarantee that should hold by construction did not: a logic bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsb
