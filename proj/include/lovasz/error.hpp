#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lovasz {

/// Base class of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: out-of-range vertex, negative weight, malformed parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed graph or weight file. `line` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exponential-time routine was asked for an instance above its configured limit.
class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& quantity, std::size_t n, std::size_t limit)
      : Error(quantity + ": n = " + std::to_string(n) + " exceeds limit " + std::to_string(limit)),
        quantity_(quantity) {}
  const std::string& quantity() const noexcept { return quantity_; }

 private:
  std::string quantity_;
};

/// A matrix that had to be positive semidefinite has an eigenvalue below tolerance.
class NotPsdError : public Error {
 public:
  explicit NotPsdError(double lambda_min)
      : Error("matrix is not positive semidefinite: lambda_min = " + std::to_string(lambda_min)),
        lambda_min_(lambda_min) {}
  double lambda_min() const noexcept { return lambda_min_; }

 private:
  double lambda_min_;
};

/// A matrix violates a prescribed entry pattern (feasible, dual feasible, compatible).
class PatternError : public Error {
 public:
  PatternError(const std::string& rule, std::size_t row, std::size_t col, double residual)
      : Error(rule + " violated at (" + std::to_string(row) + ", " + std::to_string(col) +
              "), residual " + std::to_string(residual)),
        row_(row), col_(col), residual_(residual) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t row_, col_;
  double residual_;
};

/// Numerical routine failed to finish (iteration cap, breakdown).
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace lovasz
