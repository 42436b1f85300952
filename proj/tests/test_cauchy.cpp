#include <doctest.h>

#include "oracles.hpp"
#include "sdreal/cauchy.hpp"

using namespace sdreal;

TEST_CASE("cauchy_of_rational") {
  CHECK(cauchy_of_rational(Rational(0)).seq(7) == Rational(0));
  CHECK(cauchy_of_rational(make_rational(1, 3)).mod(5) == 0);
  CHECK_THROWS_AS(cauchy_of_rational(make_rational(3, 2)), std::domain_error);
}

TEST_CASE("approx_split examples") {
  Rational zero(0), half = make_rational(1, 2);
  CHECK(approx_split(cauchy_of_rational(Rational(0)), zero, half) == SplitSide::left);
  CHECK(approx_split(cauchy_of_rational(Rational(1)), zero, half) == SplitSide::right);
  CHECK(approx_split(cauchy_of_rational(make_rational(1, 4)), zero, half) == SplitSide::left);
  CHECK_THROWS_AS(approx_split(cauchy_of_rational(Rational(0)), half, zero),
                  std::invalid_argument);
  CHECK_THROWS_AS(approx_split(cauchy_of_rational(Rational(0)), half, half),
                  std::invalid_argument);
}

TEST_CASE("approx_split soundness over a rational grid") {
  for (int qn = -16; qn <= 16; ++qn) {
    Rational q = make_rational(qn, 16);
    CauchyReal x = cauchy_of_rational(q);
    for (int an = -16; an <= 15; ++an) {
      for (int bn = an + 1; bn <= 16; ++bn) {
        Rational a = make_rational(an, 16), b = make_rational(bn, 16);
        if (approx_split(x, a, b) == SplitSide::left) {
          CHECK(cmp(q, b) <= 0);
        } else {
          CHECK(cmp(a, q) <= 0);
        }
      }
    }
  }
}

TEST_CASE("complete: modulus bookkeeping") {
  Modulus id = identity_modulus();
  auto xs = [](std::uint64_t) { return cauchy_of_rational(Rational(0)); };
  CauchyReal lim = complete(xs, id);
  CHECK(lim.mod(3) == 5);                 // max(id(4), 5)
  CHECK(lim.mod(1) == 3);                 // max(id(2), 3)
  CHECK(lim.seq(9) == Rational(0));

  Modulus big = [](std::uint64_t p) { return p * p; };
  CauchyReal lim2 = complete(xs, big);
  for (std::uint64_t p = 1; p <= 12; ++p) {
    CHECK(lim2.mod(p) == std::max((p + 1) * (p + 1), p + 2));
  }
}

TEST_CASE("complete: converging constant-rational sequences") {
  // xs(n) = 1 - 2^-n, limit 1, identity modulus
  auto xs = [](std::uint64_t n) {
    return cauchy_of_rational(Rational(1) - pow2(-static_cast<long>(n)));
  };
  CauchyReal lim = complete(xs, identity_modulus());
  for (std::uint64_t n : {1, 2, 5, 11}) {
    Rational err(abs(lim.seq(n) - 1));
    CHECK(cmp(err, pow2(-static_cast<long>(n))) <= 0);
  }
  // convergence through the completed modulus: |seq(n) - 1| <= 2^-(p+1)
  // for n >= mod(p)
  for (std::uint64_t p : {1, 3, 8}) {
    std::uint64_t n = lim.mod(p);
    Rational err(abs(lim.seq(n) - 1));
    CHECK(cmp(err, pow2(-static_cast<long>(p + 1))) <= 0);
  }
}

TEST_CASE("rational-level arithmetic") {
  CauchyReal x = cauchy_of_rational(make_rational(1, 4));
  CauchyReal y = cauchy_of_rational(make_rational(1, 2));

  CHECK(add_cauchy(x, y).seq(3) == make_rational(3, 4));
  CHECK(sub_cauchy(x, y).seq(3) == make_rational(-1, 4));
  CHECK(add_cauchy(x, sub_cauchy(cauchy_of_rational(Rational(0)), x)).seq(5) == Rational(0));

  // mods shift by one per level
  CauchyReal shifted{[](std::uint64_t) { return Rational(0); },
                     [](std::uint64_t p) { return 10 * p; }};
  CHECK(add_cauchy(shifted, shifted).mod(4) == 50);
  CHECK(scale2_cauchy(shifted, 1).mod(4) == 50);

  CHECK(scale2_cauchy(x, 0).seq(9) == make_rational(1, 2));
  CHECK(scale2_cauchy(x, 1).seq(9) == make_rational(-1, 2));
}

TEST_CASE("div_cauchy examples and accuracy") {
  CauchyReal q = div_cauchy(cauchy_of_rational(make_rational(1, 4)),
                            cauchy_of_rational(make_rational(1, 2)));
  for (std::uint64_t p : {1, 5, 20, 40}) {
    Rational err(abs(q.seq(q.mod(p)) - make_rational(1, 2)));
    CHECK(cmp(err, pow2(-static_cast<long>(p + 1))) < 0);
  }
}

TEST_CASE("div_cauchy accuracy on a grid") {
  // |x| <= y, y >= 1/4: the sampling shift must deliver the contract
  oracles::RationalGen gen(99);
  for (int i = 0; i < 60; ++i) {
    Rational y = gen.at_least(1, 4);
    Rational x = gen.unit() * y;
    CauchyReal d = div_cauchy(cauchy_of_rational(x), cauchy_of_rational(y));
    Rational want = x / y;
    for (std::uint64_t p : {1, 7, 19, 33}) {
      Rational err(abs(d.seq(d.mod(p)) - want));
      CHECK(cmp(err, pow2(-static_cast<long>(p + 1))) < 0);
    }
  }
}
