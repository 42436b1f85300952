#pragma once

#include <functional>

#include "sdreal/cauchy.hpp"
#include "sdreal/stream.hpp"

namespace sdreal {

// Sequence of digit streams indexed by naturals. Must be deterministic:
// the same index yields the same stream object or a value-equal one.
using StreamSequence = std::function<DigitStream(std::uint64_t)>;

// Limit of a sequence converging with modulus M
// (|value(F n) - x| <= 2^-p for all n >= M(p)), computed digit by digit:
// classify F at the pivot index through triple_cases, emit +1/0/-1, and
// continue on the sequence rescaled by the matching transformer with the
// modulus shifted by one.
DigitStream direct_limit(Modulus M, StreamSequence F);

// The same limit through the rational representation: translate every
// F(n), complete the resulting Cauchy sequence, translate back.
DigitStream indirect_limit(Modulus M, StreamSequence F);

namespace detail {
// The intermediate real built by indirect_limit, exposed for structural
// checks of its modulus.
CauchyReal indirect_limit_cauchy(Modulus M, StreamSequence F);
}  // namespace detail

}  // namespace sdreal
