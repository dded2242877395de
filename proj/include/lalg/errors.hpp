#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lalg {

/// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: non-square tables, unknown element names, partial maps,
/// objects built over different algebras.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (e.g. an unbounded algebra
/// passed where a least element is required).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A configured search cap was exceeded.
class CapacityError : public Error {
 public:
  CapacityError(std::string cap, std::size_t limit, std::size_t requested)
      : Error("capacity exceeded: " + cap + " = " + std::to_string(requested) +
              " (limit " + std::to_string(limit) + ")"),
        cap_(std::move(cap)),
        limit_(limit),
        requested_(requested) {}

  const std::string& cap() const noexcept { return cap_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::string cap_;
  std::size_t limit_;
  std::size_t requested_;
};

/// JSON or text input that does not parse. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lalg
