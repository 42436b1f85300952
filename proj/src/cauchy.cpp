#include "sdreal/cauchy.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdreal {

Modulus identity_modulus() {
  return [](std::uint64_t p) { return p; };
}

CauchyReal cauchy_of_rational(const Rational& q) {
  if (!in_unit_interval(q)) {
    throw std::domain_error("cauchy_of_rational: |q| > 1");
  }
  return CauchyReal{
      [q](std::uint64_t) { return q; },
      [](std::uint64_t) { return std::uint64_t{0}; },
  };
}

SplitSide approx_split(const CauchyReal& x, const Rational& a, const Rational& b) {
  if (cmp(a, b) >= 0) throw std::invalid_argument("approx_split: requires a < b");
  Rational gap = b - a;
  std::uint64_t p = 1;
  while (cmp(pow2(-static_cast<long>(p)), gap) >= 0) ++p;
  std::uint64_t n = x.mod(p + 1);
  Rational mid = (a + b) / 2;
  return cmp(x.seq(n), mid) <= 0 ? SplitSide::left : SplitSide::right;
}

CauchyReal complete(std::function<CauchyReal(std::uint64_t)> xs, Modulus M) {
  return CauchyReal{
      [xs](std::uint64_t n) {
        std::uint64_t pos = n == 0 ? 1 : n;
        CauchyReal r = xs(n);
        return r.seq(r.mod(pos));
      },
      [M](std::uint64_t p) { return std::max(M(p + 1), p + 2); },
  };
}

CauchyReal add_cauchy(const CauchyReal& x, const CauchyReal& y) {
  return CauchyReal{
      [x, y](std::uint64_t n) { return x.seq(n) + y.seq(n); },
      [x, y](std::uint64_t p) { return std::max(x.mod(p + 1), y.mod(p + 1)); },
  };
}

CauchyReal sub_cauchy(const CauchyReal& x, const CauchyReal& y) {
  return CauchyReal{
      [x, y](std::uint64_t n) { return x.seq(n) - y.seq(n); },
      [x, y](std::uint64_t p) { return std::max(x.mod(p + 1), y.mod(p + 1)); },
  };
}

CauchyReal scale2_cauchy(const CauchyReal& x, int d) {
  if (d < -1 || d > 1) throw std::invalid_argument("scale2_cauchy: digit not in {-1,0,1}");
  return CauchyReal{
      [x, d](std::uint64_t n) { return 2 * x.seq(n) - d; },
      [x](std::uint64_t p) { return x.mod(p + 1); },
  };
}

CauchyReal div_cauchy(const CauchyReal& x, const CauchyReal& y) {
  // |x/y - a/b| <= 4|x-a| + 32|a||y-b| for y >= 1/4, b >= 1/8,
  // |a| <= 1 + 2^-3, so sampling 7 positions deeper suffices.
  return CauchyReal{
      [x, y](std::uint64_t n) {
        Rational a = x.seq(n + 7);
        Rational b = y.seq(n + 7);
        Rational floor = make_rational(1, 8);
        if (cmp(b, floor) < 0) b = floor;
        return Rational(a / b);
      },
      [x, y](std::uint64_t p) { return std::max(x.mod(p + 7), y.mod(p + 7)); },
  };
}

}  // namespace sdreal
