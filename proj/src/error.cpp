#include "baba/error.hpp"

#include <sstream>

namespace baba {
namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::ostringstream out;
  out << "validation failed";
  for (const auto& problem : problems) out << "\n  " << problem;
  return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : Error(join_problems(problems)), problems_(std::move(problems)) {}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

EnumerationLimitError::EnumerationLimitError(std::size_t assumptions, std::size_t cap)
    : Error("enumeration refused: " + std::to_string(assumptions) +
            " assumptions exceed the cap of " + std::to_string(cap)) {}

}  // namespace baba
