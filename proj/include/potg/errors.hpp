#pragma once

#include <stdexcept>

namespace potg {

/// Malformed or out-of-range caller input.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A sequence that has no realization was passed where one is required.
struct non_graphical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace potg
