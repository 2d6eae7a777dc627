#pragma once

#include <stdexcept>
#include <string>

namespace tfg {

// Malformed text or file input.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured group-order bound.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation called outside its domain (wrong triple kind, bad arguments).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace tfg
