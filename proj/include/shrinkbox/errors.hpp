#pragma once

#include <stdexcept>

namespace shrinkbox {

// Malformed inputs, bad parameters, unusable files. CLI maps these to exit 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Computations with no defined result: degenerate fit, singular inversion,
// empty match set. CLI maps these to exit 3.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shrinkbox
