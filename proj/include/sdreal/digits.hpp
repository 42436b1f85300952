#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdreal/rational.hpp"

namespace sdreal {

// The signed binary digit alphabet. A digit sequence d1 d2 d3 ...
// denotes sum_i d_i * 2^-i, a real number in [-1, 1].
enum class SignedDigit : std::int8_t { minus = -1, zero = 0, plus = 1 };

constexpr int to_int(SignedDigit d) { return static_cast<int>(d); }

SignedDigit digit_from_int(int v);  // v must be -1, 0 or +1
SignedDigit negate(SignedDigit d);
char to_char(SignedDigit d);  // '-', '0', '+'

using DigitList = std::vector<SignedDigit>;

// Render as a string over {+,0,-}, e.g. "+0-+".
std::string render(const DigitList& l);

// sum_{i=1..n} l[i-1] * 2^-i as an exact fraction.
Rational sum_digits(const DigitList& l);

}  // namespace sdreal
