#include "sdreal/rational.hpp"

#include <stdexcept>

namespace sdreal {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow2(long e) {
  Rational q(1);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return q;
}

Rational scale_pow2(const Rational& q, long e) {
  Rational r;
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

bool in_unit_interval(const Rational& q) {
  return cmp(abs(q), 1) <= 0;
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace sdreal
