#pragma once

#include <stdexcept>
#include <string>

namespace lurkit {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix had the wrong dimension for the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument was outside its admissible range.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// An input violated a numerical contract (e.g. non-Hermitian beyond
/// tolerance, imaginary residue where a real value is guaranteed).
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace lurkit
