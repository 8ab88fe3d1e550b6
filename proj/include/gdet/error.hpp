#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed matrix text. Line and column are 1-based; column 0 means the
/// whole line is at fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Shapes or indices that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (non-integer entry
/// for the exact oracle, dependent basis, non-finite value).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration guard was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Matrix is not of full column rank within tolerance.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Linear system has no unique solution because Gdet(A) = 0.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Right-hand side is not in the column space of A.
class InconsistentError : public Error {
 public:
  InconsistentError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace gdet
