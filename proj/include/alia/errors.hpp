#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alia {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A square matrix that has no inverse. Carries the computed rank.
class SingularMatrix : public Error {
 public:
  SingularMatrix(std::size_t rank, std::size_t size)
      : Error("singular matrix: rank " + std::to_string(rank) + " < " +
              std::to_string(size)),
        rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

/// A theorem's hypothesis was checked and does not hold, or a builder's
/// self-verification failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A polynomial division by a linear form left a nonzero remainder.
class InexactDivision : public Error {
 public:
  /// `f` is the polynomial whose divided difference was requested.
  InexactDivision(std::string f, const std::string& detail)
      : Error("inexact division for f = " + f + ": " + detail), dividend_(std::move(f)) {}
  const std::string& dividend() const { return dividend_; }

 private:
  std::string dividend_;
};

}  // namespace alia
