#pragma once

#include <stdexcept>
#include <string>

namespace subtree_iso {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (edge lists, level sequences, codes).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition failed (unrooted tree where a root is needed,
/// invalid vertex index, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An order or parameter is outside the supported range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (set size, arithmetic width) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace subtree_iso
