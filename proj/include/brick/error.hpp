#pragma once

#include <stdexcept>
#include <string>

namespace brick {

/// Raised when a computation is asked something mathematically invalid
/// (index out of range, u not below v in Bruhat order, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed textual input (datum literals, words, files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace brick
