#pragma once

#include <stdexcept>
#include <string>

namespace clustmax {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid graph construction (self-loop, endpoint out of range).
class GraphError : public Error {
 public:
  using Error::Error;
};

// Malformed graph6 or skeleton input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's mathematical domain (k < 3, n = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Request beyond what the implementation is built to handle in bounded time.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace clustmax
