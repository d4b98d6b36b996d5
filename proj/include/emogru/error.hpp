#pragma once

#include <stdexcept>
#include <string>

namespace emogru {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension / shape contract violations (maps to exit code 1).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Bad configuration: unknown keys, out-of-range values, missing paths (exit code 1).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input files, unknown labels, unusable examples (exit code 2).
class DataError : public Error {
 public:
  using Error::Error;
};

// Non-finite values where finite ones are required (exit code 3).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace emogru
