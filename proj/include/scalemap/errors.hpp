#pragma once

#include <stdexcept>
#include <string>

namespace scalemap {

/// Invalid configuration or contract violation detected before/while setting
/// up a computation. Maps to CLI exit code 3.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical breakdown during a run (non-finite amplitudes, boundary leak
/// beyond the abort threshold, singular solve). Maps to CLI exit code 4.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scalemap
