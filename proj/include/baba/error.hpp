#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace baba {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad index, quota out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The input describes an ill-formed signature, framework or profile. All
// problems found are collected, not just the first one.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems);

  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// Malformed document text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Subset enumeration refused because the signature exceeds the configured cap.
class EnumerationLimitError : public Error {
 public:
  EnumerationLimitError(std::size_t assumptions, std::size_t cap);
};

}  // namespace baba
