#pragma once

#include <stdexcept>
#include <string>

namespace colorembed {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input data: out-of-range channel, malformed file, invalid graph.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Caller misuse, e.g. mixing points from different color spaces.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A broken internal invariant.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace colorembed
