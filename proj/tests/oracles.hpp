#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <cstdint>
#include <utility>
#include <vector>

#include "sdreal/cauchy.hpp"
#include "sdreal/convert.hpp"
#include "sdreal/stream.hpp"

namespace oracles {

using sdreal::DigitStream;
using sdreal::Rational;

// Literal fold for the rational-sequence translation: recomputes the
// whole prefix sum from scratch for each n, exactly as a step-by-step
// recursion would.
inline Rational literal_prefix_sum(const DigitStream& u, std::uint64_t n) {
  Rational a = Rational(sdreal::to_int(u.at(0))) / 2;
  DigitStream rest = u.tail();
  for (std::uint64_t k = 0; k < n; ++k) {
    auto [d, next] = rest.destruct();
    a += sdreal::scale_pow2(Rational(sdreal::to_int(d)), -static_cast<long>(k + 2));
    rest = next;
  }
  return a;
}

// Digit expansion by literally iterating single-digit extraction,
// carrying the nested closures.
inline std::vector<sdreal::SignedDigit> literal_expansion(const sdreal::CauchyReal& x,
                                                          std::uint64_t n) {
  std::vector<sdreal::SignedDigit> out;
  sdreal::CauchyReal cur = x;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto [d, y] = sdreal::extract_digit(cur);
    out.push_back(d);
    cur = y;
  }
  return out;
}

// Binary-search square root: returns r with r <= sqrt(q) <= r + 2^-bits,
// for q in [0, 1].
inline Rational sqrt_lower_bound(const Rational& q, int bits) {
  if (cmp(q, 0) <= 0) return Rational(0);
  Rational lo(0), hi(1);
  for (int i = 0; i < bits + 2; ++i) {
    Rational mid = (lo + hi) / 2;
    if (cmp(mid * mid, q) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// Exact rational Heron iterates: h(0) = 1, h(n+1) = (h(n) + q/h(n))/2.
inline Rational rational_heron(const Rational& q, std::uint64_t n) {
  Rational h(1);
  for (std::uint64_t i = 0; i < n; ++i) h = (h + q / h) / 2;
  return h;
}

// Deterministic rational generator for property tests: denominators are
// mixed powers of two and odd numbers.
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t bits() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 16;
  }

  // uniform-ish in [-1, 1]
  Rational unit() {
    std::uint64_t den = (bits() % 2 == 0) ? (std::uint64_t{1} << (1 + bits() % 14))
                                          : (2 * (bits() % 8191) + 1);
    std::uint64_t num = bits() % (2 * den + 1);  // 0 .. 2 den
    Rational q(static_cast<long>(num) - static_cast<long>(den), static_cast<long>(den));
    q.canonicalize();
    return q;
  }

  // in [0, 1]
  Rational unit_nonneg() {
    Rational q = unit();
    return Rational(abs(q));
  }

  // in [lo_num/lo_den, 1]
  Rational at_least(long lo_num, long lo_den) {
    Rational lo = sdreal::make_rational(lo_num, lo_den);
    for (;;) {
      Rational q = unit_nonneg();
      if (cmp(q, lo) >= 0) return q;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace oracles
