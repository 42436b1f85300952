#pragma once

#include "sdreal/limit.hpp"
#include "sdreal/stream.hpp"

namespace sdreal {

// Least n with p <= 2^n; rejects p < 1.
std::uint64_t poslog(std::uint64_t p);

// n-th iterate of x -> (x + u/x)/2 starting from 1, as a digit stream.
// Needs 1/16 <= value(u) <= 1 for the division to stay well-behaved.
DigitStream heron(const DigitStream& u, std::uint64_t n);

// Square root for value(u) >= 0 (negative values collapse to 0 through
// the head rules). Rules, first match wins on the digit prefix:
//   -1 ...            -> constant 0
//   0 -1 ...          -> constant 0
//   0 0 u             -> 0 : sqrt(u)
//   0 +1 -1 u         -> 0 : sqrt(+1 u)
//   +1 -1 -1 u        -> 0 : sqrt(+1 u)
//   otherwise         -> direct limit of the Heron iterates, modulus id
DigitStream sqrt_stream(const DigitStream& u);

// value(u) * sum_digits(l), folded as nested averages:
//   mult_sum(u, [])     = 0
//   mult_sum(u, d :: l) = average(sd_times(d, u), mult_sum(u, l))
DigitStream mult_sum(const DigitStream& u, const DigitList& l);

enum class LimitKind { direct, indirect };

// value(u) * value(v) as the limit (modulus id) of the sequence
// n -> mult_sum(u, prefix(v, n)), using the chosen limit operator.
DigitStream mult_via_limit(const DigitStream& u, const DigitStream& v, LimitKind kind);

// value(u) * value(v) through the rational representation: the product
// sequence sampled two positions deeper on each side.
DigitStream mult_via_cauchy(const DigitStream& u, const DigitStream& v);

}  // namespace sdreal
