#ifndef WRVAR_ERRORS_HPP
#define WRVAR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wrvar {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Permutations of different degree were combined.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

// Closure enumeration grew past the configured element cap.
class ClosureExceedsCap : public Error {
 public:
  using Error::Error;
};

// A permutation degree would exceed the 16-bit point representation.
class PointLimitExceeded : public Error {
 public:
  using Error::Error;
};

// An element does not belong to the group it was used with.
class ForeignElement : public Error {
 public:
  using Error::Error;
};

// Quotient requested by a non-normal subgroup.
class NotNormal : public Error {
 public:
  using Error::Error;
};

// Group order exceeds the cap of the requested operation.
class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotAbelian : public Error {
 public:
  using Error::Error;
};

class ExponentMismatch : public Error {
 public:
  using Error::Error;
};

class TrivialGroup : public Error {
 public:
  using Error::Error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

// Word evaluation was given fewer elements than the word's rank.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

// An exhaustive tuple scan would exceed the configured scan cap.
class ScanCapExceeded : public Error {
 public:
  using Error::Error;
};

// An operation's mathematical precondition does not hold for the inputs.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// Text input rejected; position is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at offset " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wrvar

#endif
