#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indratio {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidEdge : public Error {
public:
  using Error::Error;
};

class InvalidVertex : public Error {
public:
  using Error::Error;
};

class InvalidParameter : public Error {
public:
  using Error::Error;
};

/// Malformed textual input. `offset()` is the byte position where decoding stopped.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// An operation's documented precondition does not hold for its input.
class PreconditionViolated : public Error {
public:
  using Error::Error;
};

class InvalidConstants : public Error {
public:
  using Error::Error;
};

class Infeasible : public Error {
public:
  using Error::Error;
};

class NotSupported : public Error {
public:
  using Error::Error;
};

/// Internal invariant failure: the extracted set is smaller than the proven bound.
class GuaranteeViolation : public Error {
public:
  using Error::Error;
};

}  // namespace indratio
