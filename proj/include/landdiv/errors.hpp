#pragma once

#include <stdexcept>
#include <string>

namespace landdiv {

/// Bad user input: malformed files, out-of-range values, inconsistent shapes.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: non-convergence, envelope violation, degenerate data.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace landdiv
