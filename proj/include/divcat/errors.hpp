#pragma once

#include <stdexcept>
#include <string>

namespace divcat {

/// Malformed bracket text; `position` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A brute-force search was asked to run above its configured size cap.
class SizeGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The zeta function of the given category has no convolution inverse.
class NotMobiusError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace divcat
