#pragma once

#include <stdexcept>
#include <string>

namespace schurlab {

/// Unsupported parameters (field degree out of table range, bad override, ...).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Linear system over Z_4 whose coefficient matrix is not a unit.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A partition that does not satisfy the Schur ring conditions, or scheme
/// data that is internally inconsistent.
class SchemeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal construction assertion failed (orbit lengths, group orders).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace schurlab
