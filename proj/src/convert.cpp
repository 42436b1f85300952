#include "sdreal/convert.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace sdreal {

namespace {

// Incremental partial sums over a digit stream. Forward queries extend
// the running sum by one digit at a time; a backward query recomputes
// from scratch (the digits themselves stay memoized in the stream).
class PrefixSums {
 public:
  explicit PrefixSums(DigitStream u) : u_(std::move(u)) {}

  // sum of digits u[0..n]
  Rational at(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    if (have_ && last_n_ <= n) {
      extend(n);
      return sum_;
    }
    if (have_ && last_n_ > n) return fresh(n);
    sum_ = term(0);
    last_n_ = 0;
    have_ = true;
    extend(n);
    return sum_;
  }

 private:
  Rational term(std::uint64_t i) {
    int d = to_int(u_.at(i));
    if (d == 0) return Rational(0);
    return scale_pow2(Rational(d), -static_cast<long>(i + 1));
  }

  void extend(std::uint64_t n) {
    while (last_n_ < n) {
      ++last_n_;
      int d = to_int(u_.at(last_n_));
      if (d != 0) sum_ += scale_pow2(Rational(d), -static_cast<long>(last_n_ + 1));
    }
  }

  Rational fresh(std::uint64_t n) {
    mpz_class num(0);
    for (std::uint64_t i = 0; i <= n; ++i) {
      mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 1);
      num += to_int(u_.at(i));
    }
    return scale_pow2(Rational(num), -static_cast<long>(n + 1));
  }

  DigitStream u_;
  std::mutex mu_;
  Rational sum_;
  std::uint64_t last_n_ = 0;
  bool have_ = false;
};

const Rational& quarter() {
  static const Rational q = make_rational(1, 4);
  return q;
}
const Rational& minus_quarter() {
  static const Rational q = make_rational(-1, 4);
  return q;
}

SignedDigit digit_of_approximation(const Rational& s) {
  if (cmp(s, minus_quarter()) <= 0) return SignedDigit::minus;
  if (cmp(s, quarter()) <= 0) return SignedDigit::zero;
  return SignedDigit::plus;
}

// Emits the expansion of x by keeping the current zoom level k and the
// accumulated digit offset c, so that the level-k residual is
// 2^k * x - c. Pointwise this agrees with iterating extract_digit; the
// flat state avoids re-walking one closure per already-emitted digit.
class CauchyDigitsProducer final : public DigitStream::Producer {
 public:
  explicit CauchyDigitsProducer(CauchyReal x) : x_(std::move(x)) {}

  SignedDigit next() override {
    Rational s = x_.seq(x_.mod(3 + level_));
    Rational residual = scale_pow2(s, static_cast<long>(level_)) - offset_;
    SignedDigit d = digit_of_approximation(residual);
    offset_ = 2 * offset_ + to_int(d);
    ++level_;
    return d;
  }

 private:
  CauchyReal x_;
  std::uint64_t level_ = 0;
  Rational offset_{0};
};

// Expansion of an exact rational: the residual r is carried exactly and
// updated by r -> 2r - d.
class RationalDigitsProducer final : public DigitStream::Producer {
 public:
  explicit RationalDigitsProducer(Rational r) : r_(std::move(r)) {}

  SignedDigit next() override {
    SignedDigit d = digit_of_approximation(r_);
    r_ = 2 * r_ - to_int(d);
    return d;
  }

 private:
  Rational r_;
};

}  // namespace

CauchyReal stream_to_cauchy(const DigitStream& u) {
  auto sums = std::make_shared<PrefixSums>(u);
  return CauchyReal{
      [sums](std::uint64_t n) { return sums->at(n); },
      identity_modulus(),
  };
}

std::pair<SignedDigit, CauchyReal> extract_digit(const CauchyReal& x) {
  SignedDigit d = digit_of_approximation(x.seq(x.mod(3)));
  return {d, scale2_cauchy(x, to_int(d))};
}

DigitStream cauchy_to_stream(const CauchyReal& x) {
  return DigitStream::from_producer(std::make_unique<CauchyDigitsProducer>(x));
}

DigitStream stream_of_rational(const Rational& q) {
  if (!in_unit_interval(q)) {
    throw std::domain_error("stream_of_rational: |q| > 1");
  }
  return DigitStream::from_producer(std::make_unique<RationalDigitsProducer>(q), q);
}

}  // namespace sdreal
