#pragma once

#include <stdexcept>
#include <string>

namespace famalg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Rank of sl(n) out of range (n < 2, or beyond what a routine supports).
class InvalidDimension : public Error {
public:
  using Error::Error;
};

/// Nilpotent generator E_ij requested with i == j or an index out of range.
class InvalidGenerator : public Error {
public:
  using Error::Error;
};

/// Operands live in different rings (variable counts or matrix shapes differ).
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// A computation that is only defined for a restricted range of n.
class UnsupportedRegime : public Error {
public:
  using Error::Error;
};

} // namespace famalg
