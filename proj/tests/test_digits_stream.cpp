#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "sdreal/convert.hpp"
#include "sdreal/stream.hpp"

using namespace sdreal;

namespace {
DigitList digits_of(std::initializer_list<int> l) {
  DigitList out;
  for (int d : l) out.push_back(digit_from_int(d));
  return out;
}
}  // namespace

TEST_CASE("sum_digits") {
  CHECK(sum_digits({}) == Rational(0));
  CHECK(sum_digits(digits_of({1, -1})) == make_rational(1, 4));
  CHECK(sum_digits(digits_of({0, 0, 1})) == make_rational(1, 8));
}

TEST_CASE("digit rendering") {
  CHECK(render(digits_of({1, 0, -1, 1})) == "+0-+");
  CHECK(render({}) == "");
}

TEST_CASE("const_stream values") {
  CHECK(const_stream(SignedDigit::plus).approx(4) == make_rational(15, 16));
  CHECK(const_stream(SignedDigit::minus).approx(5) == make_rational(-31, 32));
  CHECK(const_stream(SignedDigit::zero).approx(10) == Rational(0));
  CHECK(const_stream(SignedDigit::plus).prefix(3) == digits_of({1, 1, 1}));
}

TEST_CASE("cons_digit") {
  DigitStream half = cons_digit(SignedDigit::plus, const_stream(SignedDigit::zero));
  CHECK(half.approx(12) == make_rational(1, 2));

  DigitStream u = stream_of_rational(make_rational(1, 3));
  DigitStream c = cons_digit(SignedDigit::zero, u);
  auto [d, t] = c.destruct();
  CHECK(d == SignedDigit::zero);
  CHECK(t.prefix(8) == u.prefix(8));
  // (0 + 1/3)/2
  Rational err(abs(c.approx(20) - make_rational(1, 6)));
  CHECK(cmp(err, pow2(-20)) <= 0);

  DigitStream zero = cons_digit(SignedDigit::minus, const_stream(SignedDigit::plus));
  Rational err2(abs(zero.approx(16)));
  CHECK(cmp(err2, pow2(-16)) <= 0);
}

TEST_CASE("destruct and read counters") {
  DigitStream u = const_stream(SignedDigit::zero);
  CHECK(u.reads() == 0);
  auto [d1, t1] = u.destruct();
  CHECK(d1 == SignedDigit::zero);
  CHECK(u.reads() == 1);
  auto [d2, t2] = t1.destruct();
  CHECK(d2 == SignedDigit::zero);
  CHECK(u.reads() == 2);  // tail reads count towards the root

  // forcing the same cell again does not count
  (void)u.destruct();
  (void)t1.destruct();
  CHECK(u.reads() == 2);
}

TEST_CASE("prefix consumption") {
  DigitStream u = stream_of_rational(make_rational(5, 7));
  CHECK(u.prefix(0).empty());
  CHECK(u.reads() == 0);
  u.prefix(6);
  CHECK(u.reads() == 6);
  u.prefix(3);
  CHECK(u.reads() == 6);  // never decreases, no recomputation
  u.prefix(9);
  CHECK(u.reads() == 9);
}

TEST_CASE("cons_digit reads propagate to the shared tail") {
  DigitStream u = const_stream(SignedDigit::plus);
  DigitStream c = cons_digit(SignedDigit::zero, u);
  c.prefix(5);
  CHECK(c.reads() == 5);
  CHECK(u.reads() == 4);  // four digits of u were pulled through the cons
}

TEST_CASE("memoization: repeated forcing yields identical digits") {
  DigitStream u = stream_of_rational(make_rational(-3, 11));
  DigitList a = u.prefix(40);
  DigitList b = u.prefix(40);
  CHECK(a == b);
  CHECK(u.reads() == 40);
}

TEST_CASE("sd_times") {
  DigitStream u = stream_of_rational(make_rational(3, 5));
  CHECK(sd_times(SignedDigit::zero, u).approx(10) == Rational(0));

  DigitStream same = sd_times(SignedDigit::plus, u);
  CHECK(same.prefix(12) == u.prefix(12));

  DigitStream neg = sd_times(SignedDigit::minus, u);
  DigitList nl = neg.prefix(12);
  DigitList ul = u.prefix(12);
  for (std::size_t i = 0; i < nl.size(); ++i) CHECK(nl[i] == negate(ul[i]));
  Rational err(abs(neg.approx(24) - make_rational(-3, 5)));
  CHECK(cmp(err, pow2(-24)) <= 0);
}

TEST_CASE("sd_times(-1,.) is an involution on prefixes") {
  oracles::RationalGen gen(7);
  for (int i = 0; i < 20; ++i) {
    DigitStream u = stream_of_rational(gen.unit());
    DigitStream w = sd_times(SignedDigit::minus, sd_times(SignedDigit::minus, u));
    CHECK(w.prefix(24) == u.prefix(24));
  }
}

TEST_CASE("approximation nesting") {
  // |approx(u,n) - approx(u,m)| <= 2^-n for all m >= n
  oracles::RationalGen gen(12);
  for (int i = 0; i < 15; ++i) {
    DigitStream u = stream_of_rational(gen.unit());
    for (std::uint64_t n : {0, 1, 3, 7, 15}) {
      Rational an = u.approx(n);
      for (std::uint64_t m : {n, n + 1, n + 8, n + 30}) {
        Rational diff(abs(an - u.approx(m)));
        CHECK(cmp(diff, pow2(-static_cast<long>(n))) <= 0);
      }
    }
  }
}

TEST_CASE("prefix sums have denominator dividing 2^n") {
  oracles::RationalGen gen(3);
  for (int i = 0; i < 10; ++i) {
    DigitStream u = stream_of_rational(gen.unit());
    for (std::uint64_t n : {1, 5, 17}) {
      Rational s = sum_digits(u.prefix(n));
      mpz_class rem, den = s.get_den();
      mpz_class two_n;
      mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
      mpz_mod(rem.get_mpz_t(), two_n.get_mpz_t(), den.get_mpz_t());
      CHECK(rem == 0);
    }
  }
}

TEST_CASE("concurrent forcing is idempotent") {
  DigitStream u = stream_of_rational(make_rational(7, 13));
  std::vector<std::thread> threads;
  std::vector<DigitList> results(4);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] { results[static_cast<std::size_t>(t)] = u.prefix(2000); });
  }
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) CHECK(results[static_cast<std::size_t>(t)] == results[0]);
  CHECK(u.reads() == 2000);
}

TEST_CASE("known-value debug checks") {
  set_precondition_checks(true);
  DigitStream u = stream_of_rational(make_rational(1, 2));
  CHECK(u.known_value().has_value());
  CHECK(*u.known_value() == make_rational(1, 2));
  auto [d, t] = u.destruct();
  // residual after one digit: 2 * 1/2 - d
  CHECK(*t.known_value() == Rational(1 - to_int(d)));
}
