#pragma once

#include <stdexcept>
#include <string>

namespace gpg {

/// Input text could not be parsed. Messages carry 1-based line numbers
/// where applicable.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

/// An instance exceeds a configured resource limit (vertex count, search
/// size). Distinct from ParseError so callers can map it to a different
/// exit code.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gpg
