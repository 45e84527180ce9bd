#pragma once

#include <stdexcept>
#include <string>

namespace mbs {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (unknown identifiers, mismatched systems).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exact integer computation left the range of the arithmetic type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A search space is larger than the configured guard.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace mbs
