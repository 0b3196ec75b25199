#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

// Base of every error raised by the library. The CLI maps subclasses to exit
// codes, so new error kinds should derive from one of the groups below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input: malformed data, unknown ids, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

class NonComposable : public InputError {
 public:
  using InputError::InputError;
};

class UnknownVertex : public InputError {
 public:
  using InputError::InputError;
};

class UnknownPair : public InputError {
 public:
  using InputError::InputError;
};

class InvalidDatum : public InputError {
 public:
  using InputError::InputError;
};

class InvalidPresentation : public InputError {
 public:
  using InputError::InputError;
};

class ShapeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class Mismatch : public InputError {
 public:
  using InputError::InputError;
};

class CyclicQuiver : public InputError {
 public:
  using InputError::InputError;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SemanticError : public InputError {
 public:
  SemanticError(const std::string& msg, std::size_t line)
      : InputError(std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The classifier only handles bases whose components are lines or cycles.
class NotTypeA : public Error {
 public:
  using Error::Error;
};

// Resource guards: search spaces and path enumeration caps.
class LimitError : public Error {
 public:
  using Error::Error;
};

class NonNilpotentCycle : public LimitError {
 public:
  using LimitError::LimitError;
};

class SearchSpaceTooLarge : public LimitError {
 public:
  using LimitError::LimitError;
};

class BudgetExceeded : public LimitError {
 public:
  using LimitError::LimitError;
};

}  // namespace nodal
