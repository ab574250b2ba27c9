// errors.hpp
#pragma once

#include <stdexcept>
#include <string>

namespace mnls {

// Raised when a measurement cannot be trusted numerically: boundary
// contamination, non-convergent quadrature, NaN fields.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by configuration parsing and validation.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mnls
