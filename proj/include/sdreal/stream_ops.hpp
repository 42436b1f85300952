#pragma once

#include "sdreal/stream.hpp"

namespace sdreal {

// value(u) + 1 for dir = +1 (needs value(u) <= 0), value(u) - 1 for
// dir = -1 (needs 0 <= value(u)). Head rules for dir = +1:
//   -1 u -> +1 u,   0 u -> +1 shift(u),   +1 u -> constant +1
// and the digit-mirrored duals for dir = -1.
DigitStream shift_one(const DigitStream& u, int dir);

// 2 * value(u) for |value(u)| <= 1/2. Head rules:
//   -1 u -> shift_one(u, -1),   0 u -> u,   +1 u -> shift_one(u, +1)
DigitStream double_stream(const DigitStream& u);

// value(u)/2 + dir * 1/4. Head rules for dir = +1:
//   -1 u -> 0 0 u,   0 u -> 0 +1 u,   +1 u -> +1 0 u
// and for dir = -1:
//   -1 u -> -1 0 u,  0 u -> 0 -1 u,  +1 u -> 0 0 u
DigitStream quarter_shift(const DigitStream& u, int dir);

// (value(u) + value(v)) / 2 by carry corecursion: the state carry i
// with tails (u', v') denotes (i + u' + v')/4; each step reads one digit
// of each input, forms K = 2i + d + e and emits +1/0/-1 as K >= 2,
// |K| <= 1 or K <= -2, leaving carry K - 4k in {-2..2}.
DigitStream average(const DigitStream& u, const DigitStream& v);

// value(u) / value(v) for |value(u)| <= value(v), value(v) >= 1/4,
// routed through the rational representation.
DigitStream divide(const DigitStream& u, const DigitStream& v);

// Which part of [-1,1] the value lies in, decided from exactly three
// digits: upper means value >= 1/8, lower means value <= -1/8, middle
// means value in [-1/4, 1/4].
enum class IntervalClass { upper, middle, lower };

IntervalClass triple_cases(const DigitStream& u);

}  // namespace sdreal
