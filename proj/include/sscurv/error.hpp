#pragma once

#include <stdexcept>
#include <string>

namespace sscurv {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Slot-kind or shape mismatch between tensors.
class ValenceError : public Error {
 public:
  using Error::Error;
};

class DegenerateMetricError : public Error {
 public:
  using Error::Error;
};

class DegeneratePlaneError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent user input (files, jets, soliton parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace sscurv
