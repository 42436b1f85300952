#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sdreal {

// Arbitrary-precision fraction, kept normalized by GMP.
using Rational = mpq_class;

// num/den as a canonical fraction; den must be nonzero.
Rational make_rational(long num, long den);

// 2^e for any (possibly negative) exponent.
Rational pow2(long e);

// q * 2^e without building an intermediate power.
Rational scale_pow2(const Rational& q, long e);

bool in_unit_interval(const Rational& q);  // |q| <= 1

std::string to_string(const Rational& q);

}  // namespace sdreal
