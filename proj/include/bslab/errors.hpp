#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bslab {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Syntax error in polynomial or file input; position is a 0-based offset.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class RingMismatchError : public Error {
public:
  using Error::Error;
};

// Configurable resource cap exceeded (e.g. Buchberger degree cap). Reported,
// never silently truncated.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

// Precondition violation on operation arguments.
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace bslab
