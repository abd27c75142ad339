#pragma once

#include <stdexcept>
#include <string>

namespace g2u {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent configuration input (missing key, non-numeric value,
// violated parameter invariant).
struct ConfigError : Error {
  using Error::Error;
};

// A well-formed problem with an empty feasible set: power caps exceeded,
// energy below the physical minimum, no admissible operation time, etc.
struct InfeasibleError : Error {
  using Error::Error;
};

// A numeric routine could not deliver the requested accuracy
// (quadrature depth exhausted, bracket violated).
struct NumericError : Error {
  using Error::Error;
};

}  // namespace g2u
