#pragma once

#include <stdexcept>
#include <string>

namespace apexrep {

// Base for every error the library raises. Each subclass maps to a distinct
// CLI exit code (see tools/apexrep_main.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric parameter is outside its domain (even k, k < 3, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// The input object violates a precondition (non-planar graph, incomplete
// drawing, mismatched gadget).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// The construction needs at least four original vertices.
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

// A state the algorithms guarantee cannot happen was reached.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

// An arrangement handed to the extraction routines is broken.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace apexrep
