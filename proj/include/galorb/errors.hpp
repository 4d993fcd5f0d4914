#pragma once

#include <stdexcept>
#include <string>

namespace galorb {

// Operands live in incompatible domains (distinct quadratic fields,
// irrational coefficient where a rational one is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A construction hit a degenerate case (constant F, zero Moebius denominator).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Numerical stage could not reach the requested accuracy at the current
// precision; callers raise the precision and retry.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two resolvent conjugates coincide within tolerance.
class CollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace galorb
