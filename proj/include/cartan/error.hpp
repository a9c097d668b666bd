#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cartan {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters or ranks outside the admissible range.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// Vector lengths or ambient dimensions disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a mathematical function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A stored datum violates a contract it must satisfy by construction.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Query not covered by the encoded classification.
class OutsideCatalog : public Error {
 public:
  using Error::Error;
};

// Results that contradict each other (negative complexity and the like).
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Syntax or semantic error, located by byte offset (text input) or by
/// line number (catalog data files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(what), offset_(offset), line_(line) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

}  // namespace cartan
