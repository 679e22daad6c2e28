#pragma once

#include <stdexcept>
#include <string>

namespace loghat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that violates a type invariant (shape, equivariance, finite order).
struct ValidationError : Error {
  using Error::Error;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace loghat
