#ifndef PARKFN_ERRORS_HPP
#define PARKFN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parkfn {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed external input: bad JSON syntax or a value of the wrong shape/type.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A domain invariant is violated (not a permutation, not a parking function,
// pair constraints broken, parameter out of range, ...).
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

// The request is well-formed but outside the supported envelope
// (size bound exceeded, shape variant without a defined operation, ...).
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// The four-tail-s3s1s2 shape family has no l-correspondence at all.
class NoCorrespondenceError : public Error {
 public:
  explicit NoCorrespondenceError(const std::string& msg) : Error(msg) {}
};

// Exact integer arithmetic would overflow 64 bits.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// Internal consistency failure; indicates a bug, never a bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace parkfn

#endif  // PARKFN_ERRORS_HPP
