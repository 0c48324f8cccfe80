#pragma once

#include <stdexcept>
#include <string>

namespace aalpha {

// Base of every error the library throws. The CLI maps the concrete type to
// an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on a parameter was violated (r > n, α outside [0,1], ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a brute-force size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Vector or matrix sizes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Iterative routine failed to converge or missed its residual target.
class SolverError : public Error {
 public:
  using Error::Error;
};

// Inputs are individually valid but mutually inconsistent.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Input file missing or unreadable.
class FileError : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list or other text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace aalpha
