#pragma once

#include <stdexcept>
#include <string>

namespace totalcolor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's stated preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed file or grid.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A construction ran but its output did not survive verification, or no
/// admissible choice was found. The message carries the diagnostics.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace totalcolor
