#include "sdreal/digits.hpp"

#include <stdexcept>

namespace sdreal {

SignedDigit digit_from_int(int v) {
  if (v < -1 || v > 1) throw std::invalid_argument("digit_from_int: value not in {-1,0,1}");
  return static_cast<SignedDigit>(v);
}

SignedDigit negate(SignedDigit d) {
  return static_cast<SignedDigit>(-to_int(d));
}

char to_char(SignedDigit d) {
  switch (d) {
    case SignedDigit::minus: return '-';
    case SignedDigit::zero: return '0';
    case SignedDigit::plus: return '+';
  }
  return '?';
}

std::string render(const DigitList& l) {
  std::string s;
  s.reserve(l.size());
  for (SignedDigit d : l) s.push_back(to_char(d));
  return s;
}

Rational sum_digits(const DigitList& l) {
  // Horner: num = sum d_i 2^(n-i), value = num / 2^n.
  mpz_class num(0);
  for (SignedDigit d : l) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 1);
    num += to_int(d);
  }
  Rational q(num);
  return scale_pow2(q, -static_cast<long>(l.size()));
}

}  // namespace sdreal
