#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dml {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix that was required to be invertible is singular.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A parametric basis whose determinant vanishes identically in t.
class SingularBasis : public SingularMatrix {
 public:
  using SingularMatrix::SingularMatrix;
};

/// A rational function has no finite value at t = 0.
class PoleAtZero : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

class UnverifiedClaim : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

/// Parse failure carrying a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Both e_i e_j and e_j e_i were given with values that are not negatives of each other,
/// or a square e_i e_i was given a nonzero value.
class SkewConflict : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A cocycle expression referenced [d_ii].
class DiagonalDelta : public Error {
 public:
  using Error::Error;
};

}  // namespace dml
