#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element does not belong to the variant of the group it is used with.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// The group does not support the requested operation (no order, infinite
/// quotient, ...).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A configured nesting bound (tower depth, wreath level, theta level) would
/// be exceeded.
class DepthError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant violated; indicates a bug or a false mathematical
/// assumption, never bad user input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wm
