#pragma once

#include <stdexcept>
#include <string>

namespace rmss {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, violated precondition, or mismatched operands.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured guard.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace rmss
