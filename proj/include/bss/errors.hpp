#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bss {

/// Root of every error thrown by the library. Machine faults are not
/// errors: they are reported through RunResult.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
public:
  FieldMismatch() : Error("operands live in different number fields") {}
};

class UnsupportedDegree : public Error {
public:
  using Error::Error;
};

class PoleError : public Error {
public:
  PoleError() : Error("denominator vanishes at the evaluation point") {}
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class CertificateFailure : public Error {
public:
  using Error::Error;
};

class OracleUnsupported : public Error {
public:
  using Error::Error;
};

} // namespace bss
