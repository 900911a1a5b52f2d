#pragma once

#include <stdexcept>
#include <string>

namespace tdom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed graph descriptor or record.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (vertex count, oracle size, integer range) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Two independently derived facts disagree; indicates a bug, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdom
