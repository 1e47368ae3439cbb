#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epsalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Grades of different shapes were combined, or a matrix product was not grade-compatible.
class GradeMismatch : public Error {
 public:
  using Error::Error;
};

/// A rewrite rule violates homogeneity or the termination order, or two rules share a left side.
class InvalidRule : public Error {
 public:
  using Error::Error;
};

class StepBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed algebra-spec file.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Syntax or name-resolution failure in an expression; carries the byte offset of the culprit.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace epsalg
