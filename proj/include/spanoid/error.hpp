#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spanoid {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input violates a mathematical precondition (bad index, family not closed, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A configured enumeration cap or search budget would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public CapacityError {
 public:
  BudgetError(const std::string& what, std::size_t lower, std::size_t upper)
      : CapacityError(what), lower_(lower), upper_(upper) {}
  std::size_t lower() const { return lower_; }
  std::size_t upper() const { return upper_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public IoError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : IoError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InfeasibleError : public DomainError {
 public:
  InfeasibleError(const std::string& what, std::vector<std::size_t> rows)
      : DomainError(what), rows_(std::move(rows)) {}
  // Constraints carrying a nonzero multiplier in the Farkas combination.
  const std::vector<std::size_t>& rows() const { return rows_; }

 private:
  std::vector<std::size_t> rows_;
};

class RetriesExhausted : public DomainError {
 public:
  using DomainError::DomainError;
};

// Exit status used by the command line front end.
int exit_code(const std::exception& e);

}  // namespace spanoid
