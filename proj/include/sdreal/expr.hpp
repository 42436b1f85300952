#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "sdreal/apps.hpp"
#include "sdreal/rational.hpp"
#include "sdreal/stream.hpp"

namespace sdreal {

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
        pos(position) {}
  std::size_t pos;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expression tree:
//   expr := rat
//         | "sqrt(" expr ")"
//         | "avg(" expr "," expr ")"
//         | "muldirect(" expr "," expr ")" | "mulindirect(" ... ")"
//         | "mulcauchy(" expr "," expr ")"
//         | "div(" expr "," expr ")"
//         | "limitdirect(" seq "," mod ")" | "limitindirect(" seq "," mod ")"
//   rat  := ["-"] int [ "/" int ]
//   seq  := "zeros" | "third"          (constant 0s; 1/3 - 2^-(n+2))
//   mod  := "id" | "sq" | "cube" | "zero"
// Whitespace is insignificant. Literals must lie in [-1, 1].
struct Expr {
  enum class Kind { literal, sqrt, avg, mul, div, limit };
  Kind kind;
  Rational value;                            // literal
  LimitKind variant = LimitKind::direct;     // mul / limit
  bool cauchy_mul = false;                   // mul
  std::string seq_name, mod_name;            // limit
  std::vector<std::unique_ptr<Expr>> args;
  std::size_t pos = 0;                       // source position, for errors
};

std::unique_ptr<Expr> parse_expr(const std::string& text);

// Checks every division (and nothing else) eagerly against conservative
// rational enclosures of the operand values; throws EvalError naming the
// offending subexpression position if a precondition cannot be verified.
void check_preconditions(const Expr& e);

DigitStream eval_expr(const Expr& e);

struct EvalResult {
  std::string digits;   // prefix rendered over {+,0,-}
  Rational approximation;
};

// prefix(eval(e), n) and its partial sum; runs check_preconditions first.
EvalResult eval_digits(const Expr& e, std::uint64_t n);

}  // namespace sdreal
