#pragma once

#include <utility>

#include "sdreal/cauchy.hpp"
#include "sdreal/stream.hpp"

namespace sdreal {

// seq(n) = partial sum of the first n+1 digits, mod = identity.
// Evaluating seq(n) consumes exactly n+1 digits of u.
CauchyReal stream_to_cauchy(const DigitStream& u);

// One digit of x (|x| <= 1 semantically): d decided by comparing
// seq(mod(3)) against -1/4 and 1/4 (ties at -1/4 give -1, ties at +1/4
// give 0), together with the residual y satisfying x = (y + d)/2,
// seq'(n) = 2 seq(n) - d and mod'(p) = mod(p+1).
std::pair<SignedDigit, CauchyReal> extract_digit(const CauchyReal& x);

// Signed-digit expansion of x (|x| <= 1 semantically): repeated digit
// extraction. |approx(result, n) - x| <= 2^-n for every n.
DigitStream cauchy_to_stream(const CauchyReal& x);

// Digit expansion of a rational; rejects |q| > 1.
DigitStream stream_of_rational(const Rational& q);

}  // namespace sdreal
