#pragma once

#include <stdexcept>
#include <string>

namespace tlab {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad arc lists, bad matrices, bad compact codes.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Unknown catalog name or filter predicate.
class UnknownName : public ParseError {
 public:
  using ParseError::ParseError;
};

// Instance exceeds a hard size cap (canonicalization, subset scan, enumeration).
class TooLarge : public Error {
 public:
  using Error::Error;
};

// Operation undefined below a minimum vertex count (delta needs n >= 5).
class TooSmall : public Error {
 public:
  using Error::Error;
};

// Oracle search exhausted its reversal budget without success.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Unknown verification check id.
class UnknownCheck : public Error {
 public:
  using Error::Error;
};

// Invalid form instance: bad arity, parameter out of the form's range.
class BadForm : public Error {
 public:
  using Error::Error;
};

// Enumeration cache failed its checksum or structural validation.
class CacheCorrupt : public Error {
 public:
  using Error::Error;
};

}  // namespace tlab
