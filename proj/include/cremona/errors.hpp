#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

// Malformed or invalid input; maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure with a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int col)
      : InputError(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line_(line),
        col_(col),
        reason_(what) {}
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_, col_;
  std::string reason_;
};

// The input is well formed but the net is not homaloidal.
class NotBirationalError : public InputError {
 public:
  using InputError::InputError;
};

// Outside the supported domain (irrational base points, symbolic resolution, ...); exit code 3.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cremona
