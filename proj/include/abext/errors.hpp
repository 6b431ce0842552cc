#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abext {

// Malformed or incompatible arguments (dimension mismatch, wrong end groups, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Sequence data that fails one of the three exactness conditions.
class ExactnessViolation : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

// Operation only defined on finite groups was handed an infinite one.
class UnsupportedInput : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

// Brute-force enumeration beyond its configured caps.
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InvalidInput {
public:
  ParseError(const std::string &what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace abext
