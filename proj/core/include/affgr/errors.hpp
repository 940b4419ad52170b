#pragma once

#include <stdexcept>
#include <string>

namespace affgr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: unparsable types, words that are not minimal
// representatives, partitions outside the allowed set.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class TypeMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotAffinePartition : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class CongruenceError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A configured size cap was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Never caught and repaired.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace affgr
