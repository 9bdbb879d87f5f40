#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace revbcd {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A truth table that is not a permutation was offered as a reversible gate.
class NotBijective : public Error {
 public:
  using Error::Error;
};

class BadArity : public Error {
 public:
  using Error::Error;
};

class WidthMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed switching-function expression.
class ExpressionError : public Error {
 public:
  using Error::Error;
};

class DuplicateLabel : public Error {
 public:
  using Error::Error;
};

class DuplicateGateName : public Error {
 public:
  using Error::Error;
};

class UnknownGateName : public Error {
 public:
  using Error::Error;
};

class UnknownWire : public Error {
 public:
  using Error::Error;
};

// A wire was offered to a second sink. Reversible circuits forbid fan-out.
class FanOutViolation : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class TooWide : public Error {
 public:
  using Error::Error;
};

class UnknownGateCost : public Error {
 public:
  using Error::Error;
};

class StagesNotLinear : public Error {
 public:
  using Error::Error;
};

class BadDigitCount : public Error {
 public:
  using Error::Error;
};

// Line-oriented text input (cost tables, netlists) that could not be read.
class ParseError : public Error {
 public:
  enum class Kind { syntax, use_before_declaration, unknown_gate, duplicate_name };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace revbcd
