#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace outerpath {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input size exceeds what an exhaustive routine supports.
class UnsupportedSize : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A structural precondition (connectivity, outerplanarity, maximality...) is not met.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a proven existence guarantee fails to materialize.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace outerpath
