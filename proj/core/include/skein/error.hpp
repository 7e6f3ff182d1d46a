#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: braid words, s-monomials, flags.
class InputError : public Error {
public:
  using Error::Error;
};

class ParseError : public InputError {
public:
  ParseError(std::size_t position, const std::string& message)
      : InputError("parse error at position " + std::to_string(position) +
                   ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class StrandMismatch : public Error {
public:
  StrandMismatch(int a, int b)
      : Error("strand count mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

class BudgetExhausted : public Error {
public:
  explicit BudgetExhausted(const std::string& context)
      : Error("step budget exhausted" +
              (context.empty() ? std::string() : " while " + context)) {}
};

}  // namespace skein
