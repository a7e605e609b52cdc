#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kemeny {

/// Argument outside an operation's domain (dimension mismatch, bad parameter).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Problem size beyond what an exact routine is allowed to attempt.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// No further samples can be drawn (pool exhausted, no available pair).
class ExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `line()` is 1-based, 0 when the whole file is at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kemeny
