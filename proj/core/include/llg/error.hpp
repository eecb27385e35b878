#pragma once

#include <stdexcept>
#include <string>

namespace llg {

// Root of every error raised by the library. Each concrete subclass names one
// failure mode; callers that only need a message can catch Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularFraming : public Error {
 public:
  using Error::Error;
};

class DomainBoundary : public Error {
 public:
  using Error::Error;
};

class DomainEscape : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class OddDimension : public Error {
 public:
  using Error::Error;
};

class NotFlat : public Error {
 public:
  using Error::Error;
};

class UnknownExample : public Error {
 public:
  using Error::Error;
};

class UnknownTensor : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Parse-time errors from the expression language.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error("syntax error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownIdentifier : public Error {
 public:
  explicit UnknownIdentifier(const std::string& name)
      : Error("unknown identifier '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class VariableOutOfRange : public Error {
 public:
  VariableOutOfRange(const std::string& name, int dim)
      : Error("variable '" + name + "' out of range for dimension " + std::to_string(dim)),
        name_(name),
        dim_(dim) {}
  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return dim_; }

 private:
  std::string name_;
  int dim_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

}  // namespace llg
