#pragma once

#include <stdexcept>
#include <string>

namespace shipcap {

// Base for every failure the library reports. The CLI maps these onto exit
// codes: UsageError -> 2, everything else -> 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a formula (e.g. GT <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Carrier that cannot be expressed in liquefied-hydrogen equivalents.
class UnsupportedCarrier : public Error {
 public:
  using Error::Error;
};

// Year outside the knots of a demand series (no extrapolation).
class RangeError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Fleet file header does not match the expected column list.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Degenerate regression input.
class FitError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace shipcap
