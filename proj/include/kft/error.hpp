#pragma once

#include <stdexcept>
#include <string>

namespace kft {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter or input violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed graph document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An instance exceeds a configured size or work limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace kft
