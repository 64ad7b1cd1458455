#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isokit {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (term syntax or theory files). `offset` is the byte
// offset into the input at which the problem was detected.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// An operation that requires an impure term was given a pure one.
class PureTermError : public Error {
public:
  using Error::Error;
};

// A theory's declared solver kind does not match its symbols or axioms.
class UnsupportedShapeError : public Error {
public:
  using Error::Error;
};

// A bounded solver returned Unknown in a position where guessing would
// corrupt the class registry; classification refuses to proceed.
class AmbiguityError : public Error {
public:
  using Error::Error;
};

// A term mentions an indeterminate whose index lies outside the index set
// supplied to the decision procedure.
class IndexSetViolation : public Error {
public:
  using Error::Error;
};

// Constructing a term would exceed the configured node cap.
class TermSizeLimitError : public Error {
public:
  using Error::Error;
};

// An internal invariant failed (e.g. the classification recursion exceeded
// its rank-based depth bound).
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace isokit
