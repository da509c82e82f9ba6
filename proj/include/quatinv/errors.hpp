#pragma once

#include <cstddef>
#include <stdexcept>
#include <cstdint>
#include <string>
#include <vector>

namespace quatinv {

// Input outside an operation's mathematical domain (zero where a unit is
// required, nonzero valuation passed to residue, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operands built over different base fields or tower arities.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Squarefree reduction needs a factorization beyond the trial-division bound.
class FactorizationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed scalar literal or JSON record. `position` is a 0-based offset
// into the literal; `line`/`column` are 1-based when known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0,
             std::size_t column = 0)
      : std::runtime_error(what), position_(position), line_(line), column_(column) {}

  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t position_;
  std::size_t line_;
  std::size_t column_;
};

// A precondition or postcondition of an algebraic procedure failed. `detail`
// carries a serialized witness of the violation (usually JSON).
class ContractViolation : public std::runtime_error {
 public:
  ContractViolation(const std::string& what, std::string detail = {})
      : std::runtime_error(what), detail_(std::move(detail)) {}

  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
};

// Alternating F2 form with a nontrivial radical. `radical` is a basis of
// it, as class bitmasks.
class DegeneratePairing : public ContractViolation {
 public:
  DegeneratePairing(const std::string& what, std::vector<std::uint32_t> radical, std::string detail = {})
      : ContractViolation(what, std::move(detail)), radical_(std::move(radical)) {}

  const std::vector<std::uint32_t>& radical() const { return radical_; }

 private:
  std::vector<std::uint32_t> radical_;
};

}  // namespace quatinv
