#pragma once

#include <stdexcept>
#include <string>

namespace uclab {

// Input that cannot be decoded: bad syntax, inconsistent widths, empty file.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_ = 0;
};

// Well-formed input outside an operation's domain (empty family, element out
// of range, delta outside (0,1], ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Request would exceed a size or pair-count guard.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace uclab
