#pragma once

#include <stdexcept>
#include <string>

namespace nsl {

/// Base class for every failure raised by the core.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed document or term text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A table entry, constant or element argument outside the universe.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Tables that are structurally unusable (wrong shape, non-permutation involution, n = 0).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked on an algebra that does not meet its hypothesis.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Search size cap exceeded without an explicit override.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// A result the theory guarantees did not materialise.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nsl
