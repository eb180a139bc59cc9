#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seaweed {

// Invalid user input (bad compositions, mismatched sizes, bad parameters).
struct InvalidDescriptorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Text that does not match the seaweed grammar. `position` is a 0-based
// offset into the input string.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Requested a contact form on a seaweed whose index is not one.
struct IndexNotOneError : std::domain_error {
  explicit IndexNotOneError(int index)
      : std::domain_error("seaweed has index " + std::to_string(index) +
                          ", contact forms exist only at index one"),
        index(index) {}
  int index;
};

// An internal invariant failed. This is a bug sentinel, never a user error;
// the CLI maps it to exit code 3.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace seaweed
