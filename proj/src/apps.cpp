#include "sdreal/apps.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "sdreal/convert.hpp"
#include "sdreal/stream_ops.hpp"

namespace sdreal {

std::uint64_t poslog(std::uint64_t p) {
  if (p < 1) throw std::domain_error("poslog: requires p >= 1");
  std::uint64_t n = 0;
  while ((n < 63 ? (std::uint64_t{1} << n) : ~std::uint64_t{0}) < p) ++n;
  return n;
}

namespace {

// Shared Heron iterates: the limit operator indexes into the sequence
// repeatedly, so each iterate is built once.
class HeronIterates {
 public:
  explicit HeronIterates(DigitStream u) : u_(std::move(u)) {
    iterates_.push_back(const_stream(SignedDigit::plus));
  }

  DigitStream get(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (iterates_.size() <= n) {
      const DigitStream& h = iterates_.back();
      iterates_.push_back(average(h, divide(u_, h)));
    }
    return iterates_[static_cast<std::size_t>(n)];
  }

 private:
  DigitStream u_;
  std::vector<DigitStream> iterates_;
  std::mutex mu_;
};

class SqrtProducer final : public DigitStream::Producer {
 public:
  explicit SqrtProducer(DigitStream u) : src_(std::move(u)) {}

  SignedDigit next() override {
    for (;;) {
      switch (mode_) {
        case Mode::constant_zero:
          return SignedDigit::zero;
        case Mode::delegate:
          return inner_->at(pos_++);
        case Mode::scan: {
          int d1 = to_int(src_.at(0));
          if (d1 == -1) {
            mode_ = Mode::constant_zero;
            continue;
          }
          int d2 = to_int(src_.at(1));
          if (d1 == 0 && d2 == -1) {
            mode_ = Mode::constant_zero;
            continue;
          }
          if (d1 == 0 && d2 == 0) {
            src_ = src_.drop(2);
            return SignedDigit::zero;  // stay scanning the rest
          }
          int d3 = to_int(src_.at(2));
          if ((d1 == 0 && d2 == 1 && d3 == -1) || (d1 == 1 && d2 == -1 && d3 == -1)) {
            src_ = cons_digit(SignedDigit::plus, src_.drop(3));
            return SignedDigit::zero;
          }
          detail::check_precondition(
              src_, [](const Rational& v) { return cmp(v, make_rational(1, 8)) >= 0; },
              "sqrt_stream: iteration branch reached with value < 1/8");
          auto iter = std::make_shared<HeronIterates>(src_);
          inner_ = direct_limit(identity_modulus(),
                                [iter](std::uint64_t n) { return iter->get(n); });
          mode_ = Mode::delegate;
          continue;
        }
      }
    }
  }

 private:
  enum class Mode { scan, constant_zero, delegate };
  Mode mode_ = Mode::scan;
  DigitStream src_;
  std::optional<DigitStream> inner_;
  std::uint64_t pos_ = 0;
};

}  // namespace

DigitStream heron(const DigitStream& u, std::uint64_t n) {
  detail::check_precondition(
      u, [](const Rational& v) { return cmp(v, make_rational(1, 16)) >= 0 && cmp(v, 1) <= 0; },
      "heron: value outside [1/16, 1]");
  HeronIterates iter(u);
  return iter.get(n);
}

DigitStream sqrt_stream(const DigitStream& u) {
  auto p = std::make_unique<SqrtProducer>(u);
  return DigitStream::from_producer(std::move(p));
}

DigitStream mult_sum(const DigitStream& u, const DigitList& l) {
  DigitStream acc = const_stream(SignedDigit::zero);
  for (auto it = l.rbegin(); it != l.rend(); ++it) {
    acc = average(sd_times(*it, u), acc);
  }
  return acc;
}

DigitStream mult_via_limit(const DigitStream& u, const DigitStream& v, LimitKind kind) {
  StreamSequence seq = [u, v](std::uint64_t n) { return mult_sum(u, v.prefix(n)); };
  DigitStream out = kind == LimitKind::direct ? direct_limit(identity_modulus(), seq)
                                              : indirect_limit(identity_modulus(), seq);
  auto a = u.known_value();
  auto b = v.known_value();
  if (a && b) return out.with_known_value(*a * *b);
  return out;
}

DigitStream mult_via_cauchy(const DigitStream& u, const DigitStream& v) {
  CauchyReal a = stream_to_cauchy(u);
  CauchyReal b = stream_to_cauchy(v);
  CauchyReal product{
      [a, b](std::uint64_t n) { return Rational(a.seq(n + 2) * b.seq(n + 2)); },
      [a, b](std::uint64_t p) { return std::max(a.mod(p + 2), b.mod(p + 2)); },
  };
  DigitStream out = cauchy_to_stream(product);
  auto x = u.known_value();
  auto y = v.known_value();
  if (x && y) return out.with_known_value(*x * *y);
  return out;
}

}  // namespace sdreal
