#pragma once

#include <cstdint>
#include <functional>

#include "sdreal/rational.hpp"

namespace sdreal {

// Total monotone map from a precision exponent p >= 1 to a sequence index.
using Modulus = std::function<std::uint64_t(std::uint64_t)>;

Modulus identity_modulus();  // p -> p

// A real given by a rational sequence and a modulus: for every p and
// every n >= mod(p), |x - seq(n)| < 2^-(p+1).
struct CauchyReal {
  std::function<Rational(std::uint64_t)> seq;
  Modulus mod;
};

// Constant sequence, constant-zero modulus. Rejects |q| > 1.
CauchyReal cauchy_of_rational(const Rational& q);

enum class SplitSide {
  left,  // the claim "x <= b" holds
  right  // the claim "a <= x" holds
};

// Constructive comparison: given a < b, decide x <= b or a <= x (both
// may hold; only the returned claim is guaranteed). Ties at the midpoint
// go left.
SplitSide approx_split(const CauchyReal& x, const Rational& a, const Rational& b);

// Limit of a Cauchy sequence of reals with modulus M.
// seq(n) = xs(n).seq(xs(n).mod(max(n,1))), mod(p) = max(M(p+1), p+2).
CauchyReal complete(std::function<CauchyReal(std::uint64_t)> xs, Modulus M);

CauchyReal add_cauchy(const CauchyReal& x, const CauchyReal& y);
CauchyReal sub_cauchy(const CauchyReal& x, const CauchyReal& y);

// 2x - d for a digit d in {-1,0,1}; the one-digit zoom step.
CauchyReal scale2_cauchy(const CauchyReal& x, int d);

// x/y under the semantic precondition |x| <= y and y >= 1/4. The
// denominator approximation is clamped below at 1/8 and both sequences
// are sampled 7 positions deeper.
CauchyReal div_cauchy(const CauchyReal& x, const CauchyReal& y);

}  // namespace sdreal
