#pragma once

#include <stdexcept>
#include <string>

namespace pgroup {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the presentation parser; positions are 1-based.
struct ParseError : Error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& msg)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
};

struct CosetLimitExceeded : Error {
  using Error::Error;
};

struct NotAPGroup : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct NotAbelian : Error {
  using Error::Error;
};

struct LatticeCapExceeded : Error {
  using Error::Error;
};

struct IsoCapExceeded : Error {
  using Error::Error;
};

struct InvalidParameters : Error {
  using Error::Error;
};

struct BadIdentification : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

struct DegenerateCommutators : Error {
  using Error::Error;
};

// Signals a bug: two independent computations of the same quantity disagree.
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace pgroup
