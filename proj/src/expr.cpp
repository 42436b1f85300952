#include "sdreal/expr.hpp"

#include <algorithm>
#include <cctype>

#include "sdreal/convert.hpp"
#include "sdreal/stream_ops.hpp"

namespace sdreal {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(pos, std::string("expected '") + c + "'");
    }
    ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError(pos, "expected a name");
    return text.substr(start, pos - start);
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError(pos, "expected digits");
    return mpz_class(text.substr(start, pos - start));
  }

  std::unique_ptr<Expr> rational_literal() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    mpz_class num = integer();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos;
      den = integer();
      if (den == 0) throw ParseError(start, "zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    if (!in_unit_interval(q)) throw ParseError(start, "literal out of range [-1,1]");
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::literal;
    e->value = q;
    e->pos = start;
    return e;
  }

  std::unique_ptr<Expr> expr() {
    skip_ws();
    char c = peek();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return rational_literal();

    std::size_t start = pos;
    std::string name = ident();
    auto e = std::make_unique<Expr>();
    e->pos = start;
    if (name == "sqrt") {
      e->kind = Expr::Kind::sqrt;
      expect('(');
      e->args.push_back(expr());
      expect(')');
    } else if (name == "avg" || name == "div") {
      e->kind = name == "avg" ? Expr::Kind::avg : Expr::Kind::div;
      expect('(');
      e->args.push_back(expr());
      expect(',');
      e->args.push_back(expr());
      expect(')');
    } else if (name == "muldirect" || name == "mulindirect" || name == "mulcauchy") {
      e->kind = Expr::Kind::mul;
      e->cauchy_mul = name == "mulcauchy";
      e->variant = name == "mulindirect" ? LimitKind::indirect : LimitKind::direct;
      expect('(');
      e->args.push_back(expr());
      expect(',');
      e->args.push_back(expr());
      expect(')');
    } else if (name == "limitdirect" || name == "limitindirect") {
      e->kind = Expr::Kind::limit;
      e->variant = name == "limitindirect" ? LimitKind::indirect : LimitKind::direct;
      expect('(');
      std::size_t p1 = pos;
      e->seq_name = ident();
      if (e->seq_name != "zeros" && e->seq_name != "third") {
        throw ParseError(p1, "unknown sequence '" + e->seq_name + "' (want zeros|third)");
      }
      expect(',');
      std::size_t p2 = pos;
      e->mod_name = ident();
      if (e->mod_name != "id" && e->mod_name != "sq" && e->mod_name != "cube" &&
          e->mod_name != "zero") {
        throw ParseError(p2, "unknown modulus '" + e->mod_name + "' (want id|sq|cube|zero)");
      }
      expect(')');
    } else {
      throw ParseError(start, "unknown operator '" + name + "'");
    }
    return e;
  }
};

struct Interval {
  Rational lo, hi;
};

// Rational enclosure of sqrt(q) for q in [0,1], width 2^-42.
Interval sqrt_enclosure(const Rational& q) {
  if (cmp(q, 0) <= 0) return {Rational(0), Rational(0)};
  Rational lo(0), hi(1);
  for (int i = 0; i < 42; ++i) {
    Rational mid = (lo + hi) / 2;
    if (cmp(mid * mid, q) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

Interval enclosure(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return {e.value, e.value};
    case Expr::Kind::sqrt: {
      Interval a = enclosure(*e.args[0]);
      Rational lo = cmp(a.lo, 0) < 0 ? Rational(0) : sqrt_enclosure(a.lo).lo;
      Rational hi = cmp(a.hi, 0) < 0 ? Rational(0) : sqrt_enclosure(a.hi).hi;
      return {lo, hi};
    }
    case Expr::Kind::avg: {
      Interval a = enclosure(*e.args[0]);
      Interval b = enclosure(*e.args[1]);
      return {(a.lo + b.lo) / 2, (a.hi + b.hi) / 2};
    }
    case Expr::Kind::mul: {
      Interval a = enclosure(*e.args[0]);
      Interval b = enclosure(*e.args[1]);
      Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
      Rational lo = std::min({c1, c2, c3, c4});
      Rational hi = std::max({c1, c2, c3, c4});
      return {lo, hi};
    }
    case Expr::Kind::div: {
      Interval a = enclosure(*e.args[0]);
      Interval b = enclosure(*e.args[1]);
      // b.lo >= 1/4 was checked already
      Rational c1 = a.lo / b.lo, c2 = a.lo / b.hi, c3 = a.hi / b.lo, c4 = a.hi / b.hi;
      Rational lo = std::min({c1, c2, c3, c4});
      Rational hi = std::max({c1, c2, c3, c4});
      return {lo, hi};
    }
    case Expr::Kind::limit:
      if (e.seq_name == "zeros") return {Rational(0), Rational(0)};
      return {make_rational(1, 3), make_rational(1, 3)};
  }
  throw EvalError("enclosure: bad node");
}

void check_node(const Expr& e) {
  for (const auto& a : e.args) check_node(*a);
  if (e.kind == Expr::Kind::div) {
    Interval num = enclosure(*e.args[0]);
    Interval den = enclosure(*e.args[1]);
    if (cmp(den.lo, make_rational(1, 4)) < 0) {
      throw EvalError("division at position " + std::to_string(e.pos) +
                      ": cannot verify divisor >= 1/4");
    }
    Rational na(abs(num.lo)), nb(abs(num.hi));
    Rational num_abs = std::max(na, nb);
    if (cmp(num_abs, den.lo) > 0) {
      throw EvalError("division at position " + std::to_string(e.pos) +
                      ": cannot verify |numerator| <= divisor");
    }
  }
  if (e.kind == Expr::Kind::limit && e.seq_name == "third" && e.mod_name == "zero") {
    throw EvalError("limit at position " + std::to_string(e.pos) +
                    ": modulus 'zero' does not witness convergence of 'third'");
  }
}

Modulus modulus_by_name(const std::string& name) {
  if (name == "id") return identity_modulus();
  if (name == "sq") return [](std::uint64_t p) { return p * p; };
  if (name == "cube") return [](std::uint64_t p) { return p * p * p; };
  return [](std::uint64_t) { return std::uint64_t{0}; };
}

StreamSequence sequence_by_name(const std::string& name) {
  if (name == "zeros") {
    return [](std::uint64_t) { return const_stream(SignedDigit::zero); };
  }
  // 1/3 - 2^-(n+2), converging to 1/3 with the identity modulus
  return [](std::uint64_t n) {
    return stream_of_rational(make_rational(1, 3) - pow2(-static_cast<long>(n + 2)));
  };
}

}  // namespace

std::unique_ptr<Expr> parse_expr(const std::string& text) {
  Parser p{text};
  auto e = p.expr();
  if (!p.eof()) throw ParseError(p.pos, "trailing input");
  return e;
}

void check_preconditions(const Expr& e) { check_node(e); }

DigitStream eval_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return stream_of_rational(e.value);
    case Expr::Kind::sqrt:
      return sqrt_stream(eval_expr(*e.args[0]));
    case Expr::Kind::avg:
      return average(eval_expr(*e.args[0]), eval_expr(*e.args[1]));
    case Expr::Kind::div:
      return divide(eval_expr(*e.args[0]), eval_expr(*e.args[1]));
    case Expr::Kind::mul: {
      DigitStream a = eval_expr(*e.args[0]);
      DigitStream b = eval_expr(*e.args[1]);
      if (e.cauchy_mul) return mult_via_cauchy(a, b);
      return mult_via_limit(a, b, e.variant);
    }
    case Expr::Kind::limit: {
      StreamSequence seq = sequence_by_name(e.seq_name);
      Modulus mod = modulus_by_name(e.mod_name);
      return e.variant == LimitKind::direct ? direct_limit(mod, seq) : indirect_limit(mod, seq);
    }
  }
  throw EvalError("eval: bad node");
}

EvalResult eval_digits(const Expr& e, std::uint64_t n) {
  check_preconditions(e);
  DigitStream s = eval_expr(e);
  DigitList l = s.prefix(n);
  return EvalResult{render(l), sum_digits(l)};
}

}  // namespace sdreal
