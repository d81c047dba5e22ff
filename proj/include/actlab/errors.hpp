#pragma once

#include <stdexcept>
#include <string>

namespace actlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant of a structure failed during validation; the message names
// the violated law and the witness elements.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// A declared bound would be exceeded; nothing was computed.
class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

class UnknownMonoidError : public Error {
 public:
  explicit UnknownMonoidError(const std::string& what) : Error(what) {}
};

class UnknownClaimError : public Error {
 public:
  explicit UnknownClaimError(const std::string& what) : Error(what) {}
};

// A minimal injective essential subact was not found inside an injective
// extension. One always exists, so this signals a bug, not a property of
// the input.
class EnvelopeError : public Error {
 public:
  explicit EnvelopeError(const std::string& what) : Error(what) {}
};

}  // namespace actlab
