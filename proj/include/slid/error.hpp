#pragma once

#include <stdexcept>
#include <string>

namespace slid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rule, fringe set or rule spec string is malformed or unsuitable for the
/// requested operation (e.g. an operation that needs max(S) on the empty rule).
class RuleError : public Error {
 public:
  using Error::Error;
};

/// An index, count or range argument lies outside what the inputs support.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Indicates a bug or corrupted input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Root isolation failed (no sign change on the bracket).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (JSON or b-file).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace slid
