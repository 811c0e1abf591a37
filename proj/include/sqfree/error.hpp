#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqfree {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad group spec, bad cycle string, bad config.
class InputError : public Error {
public:
  using Error::Error;
};

/// A syntax error at a known position: a 0-based column in a one-line
/// input, or a 1-based line number in a file.
class ParseError : public InputError {
public:
  enum class Unit { Column, Line };

  ParseError(const std::string& what, std::size_t position, Unit unit = Unit::Column)
      : InputError(what + (unit == Unit::Line ? " (line " : " (at column ") + std::to_string(position) + ")"),
        position_(position),
        unit_(unit) {}

  std::size_t position() const noexcept { return position_; }
  Unit unit() const noexcept { return unit_; }

private:
  std::size_t position_;
  Unit unit_;
};

/// The group is larger than the configured computation bound.
class BoundExceeded : public Error {
public:
  using Error::Error;
};

/// A mathematical invariant failed on input that should have been valid.
/// Seeing one of these means a bug, not bad input.
class DefectError : public Error {
public:
  using Error::Error;
};

/// Raised when a subgroup passed as normal is not normal.
class NotNormalError : public InputError {
public:
  using InputError::InputError;
};

}  // namespace sqfree
