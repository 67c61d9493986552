#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bockstein {

// Domain-rule failure kinds surfaced by construction and precondition checks.
enum class Errc {
  invalid_decoration,
  regular_mismatch,
  zero_rule,
  non_prime_key,
  precondition_dim,
  trivial_group,
  odd_ambient,
  range_violation,
  bad_argument,
};

const char* errc_name(Errc code);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const { return code_; }

 protected:
  struct Raw {};
  ValidationError(Raw, Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

 private:
  Errc code_;
};

// Syntax failure; `position` is a byte offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& detail)
      : std::runtime_error("parse error at offset " + std::to_string(position) +
                           ": " + detail),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A ValidationError raised while evaluating a parsed expression, annotated
// with the offset of the sub-expression that failed.
class EvalError : public ValidationError {
 public:
  EvalError(const ValidationError& cause, std::size_t position)
      : ValidationError(Raw{}, cause.code(),
                        std::string(cause.what()) + " (at offset " +
                            std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bockstein
