#pragma once

#include <stdexcept>
#include <string>

namespace vesselmc {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation
// (quantile of p >= 1, COV of a zero mean, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A value object violates one of its invariants (negative std_dev,
// d_o <= d_i, ...). Messages name the offending field.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The configuration document is not well-formed JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The configuration is well-formed but unusable: unknown keys or names,
// duplicate criteria, missing analysis blocks.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure while emitting reports.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vesselmc
