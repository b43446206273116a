#pragma once

#include <stdexcept>
#include <string>

namespace ladder {

/// File could not be read or written.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// JSON parsed but does not describe a well-formed object (wrong fields,
/// shapes, signs, malformed rationals, grade violations).
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input is well-formed but falls outside the regime a command supports
/// (e.g. inversion for p > 1, oscillator action of a non-diagonal element).
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ladder
