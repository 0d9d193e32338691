#pragma once

#include <stdexcept>
#include <string>

#include "ll/operator_algebra.hpp"

namespace ll {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, size_t offset)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

/// Parses the operator grammar:
///   expr   := ["-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := atom ("^" int)?        (negative powers for scalar atoms only)
///   atom   := "x" | "d" | "P" | "I" | "gp" | "gm" | "g1" | "i" | rational
///           | symbol | "sqrt" "(" monomial ")" | "(" expr ")"
/// "*" is noncommutative and left-associative.  Inside sqrt(...), "*", "/"
/// and "^" combine numbers and symbols into a single monomial.
OperatorPoly parse_operator(const std::string& text);

/// Scalar-only subset used for coefficients (sqrt interior grammar).
ScalarSum parse_scalar_monomial(const std::string& text);

/// Renders a polynomial as a string the grammar accepts; parse_operator on
/// the result reproduces the polynomial exactly.  Supports integer and
/// half-integer exponents (half powers come out as sqrt factors).
std::string render_operator(const OperatorPoly& poly);

}  // namespace ll
