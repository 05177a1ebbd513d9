#pragma once

#include <stdexcept>
#include <string>

namespace digifix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, violated precondition or broken image invariant.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured search budget ran out before the answer was exact.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace digifix
