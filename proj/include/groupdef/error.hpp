#ifndef GROUPDEF_ERROR_HPP
#define GROUPDEF_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groupdef {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the word/formula/boolcomb parsers; position is a 0-based byte
// offset into the input text.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Raised when an exhaustive enumeration would exceed the configured budget.
struct BudgetError : Error {
  using Error::Error;
};

} // namespace groupdef

#endif
