#pragma once
// Exception hierarchy shared by the library and the command-line tool.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace assoc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated.
struct DomainError : Error {
  using Error::Error;
};

// Requested size is above a documented desk-scale limit.
struct SizeLimitError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t token, std::size_t offset)
      : Error(what + " (token " + std::to_string(token) + ", offset " + std::to_string(offset) + ")"),
        token_index(token),
        char_offset(offset) {}
  std::size_t token_index;  // 1-based
  std::size_t char_offset;  // 0-based
};

// A monoid table failed one of the axioms.
struct MonoidError : Error {
  using Error::Error;
};

}  // namespace assoc
