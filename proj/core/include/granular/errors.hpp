#pragma once

#include <stdexcept>

namespace granular {

struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct InvalidParametrization : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A value's binary scale is finer than the grid in play.
struct ScaleTooFine : std::domain_error {
  using std::domain_error::domain_error;
};

struct LimitExceeded : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace granular
