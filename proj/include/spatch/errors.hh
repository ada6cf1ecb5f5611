#pragma once

#include <stdexcept>
#include <string>

namespace spatch {

// Invalid input data: bad labels, wrong arities, malformed files.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string &msg) : std::runtime_error(msg) {}
};

// Numerical failure at evaluation time: singular denominators, zero weights.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace spatch
