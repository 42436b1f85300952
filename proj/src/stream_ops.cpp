#include "sdreal/stream_ops.hpp"

#include <memory>
#include <stdexcept>

#include "sdreal/convert.hpp"

namespace sdreal {

namespace {

// shift_one and double_stream share one machine. Modes:
//   scan_shift: apply the shift_one head rules digit by digit
//   scan_double: inspect one digit, then become shift/pass-through
//   pass: copy the source
//   constant: emit sign_ forever
class AffineProducer final : public DigitStream::Producer {
 public:
  enum class Mode { scan_shift, scan_double, pass, constant };

  AffineProducer(Mode m, int dir, DigitStream u) : mode_(m), dir_(dir), src_(std::move(u)) {}

  SignedDigit next() override {
    for (;;) {
      switch (mode_) {
        case Mode::pass:
          return src_.at(pos_++);
        case Mode::constant:
          return digit_from_int(dir_);
        case Mode::scan_shift: {
          int d = to_int(src_.at(pos_++));
          if (d == dir_) mode_ = Mode::constant;
          if (d == -dir_) mode_ = Mode::pass;
          return digit_from_int(dir_);
        }
        case Mode::scan_double: {
          int d = to_int(src_.at(pos_++));
          if (d == 0) {
            mode_ = Mode::pass;
          } else {
            dir_ = d;
            mode_ = Mode::scan_shift;
          }
          continue;  // emitted nothing yet
        }
      }
    }
  }

 private:
  Mode mode_;
  int dir_;
  DigitStream src_;
  std::uint64_t pos_ = 0;
};

class QuarterShiftProducer final : public DigitStream::Producer {
 public:
  QuarterShiftProducer(int dir, DigitStream u) : dir_(dir), src_(std::move(u)) {}

  SignedDigit next() override {
    switch (state_) {
      case 0: {
        int d = to_int(src_.at(0));
        int first;
        if (dir_ > 0) {
          first = d > 0 ? 1 : 0;
          second_ = d == 0 ? 1 : 0;
        } else {
          first = d < 0 ? -1 : 0;
          second_ = d == 0 ? -1 : 0;
        }
        state_ = 1;
        return digit_from_int(first);
      }
      case 1:
        state_ = 2;
        return digit_from_int(second_);
      default:
        return src_.at(1 + pos_++);
    }
  }

 private:
  int dir_;
  DigitStream src_;
  int state_ = 0;
  int second_ = 0;
  std::uint64_t pos_ = 0;
};

class AverageProducer final : public DigitStream::Producer {
 public:
  AverageProducer(DigitStream u, DigitStream v) : u_(std::move(u)), v_(std::move(v)) {}

  SignedDigit next() override {
    if (!started_) {
      carry_ = to_int(u_.at(0)) + to_int(v_.at(0));
      pos_ = 1;
      started_ = true;
    }
    int k2 = 2 * carry_ + to_int(u_.at(pos_)) + to_int(v_.at(pos_));
    ++pos_;
    int out = k2 >= 2 ? 1 : (k2 <= -2 ? -1 : 0);
    carry_ = k2 - 4 * out;
    if (carry_ < -2 || carry_ > 2) throw InternalError("average: carry out of range");
    return digit_from_int(out);
  }

 private:
  DigitStream u_, v_;
  int carry_ = 0;
  std::uint64_t pos_ = 0;
  bool started_ = false;
};

std::optional<Rational> combined_known(const DigitStream& u, const DigitStream& v,
                                       Rational (*f)(const Rational&, const Rational&)) {
  auto a = u.known_value();
  auto b = v.known_value();
  if (a && b) return f(*a, *b);
  return std::nullopt;
}

}  // namespace

DigitStream shift_one(const DigitStream& u, int dir) {
  if (dir != 1 && dir != -1) throw std::invalid_argument("shift_one: dir must be +-1");
  detail::check_precondition(
      u, [dir](const Rational& v) { return dir > 0 ? cmp(v, 0) <= 0 : cmp(v, 0) >= 0; },
      "shift_one: value has the wrong sign");
  auto p = std::make_unique<AffineProducer>(AffineProducer::Mode::scan_shift, dir, u);
  if (auto v = u.known_value()) return DigitStream::from_producer(std::move(p), *v + dir);
  return DigitStream::from_producer(std::move(p));
}

DigitStream double_stream(const DigitStream& u) {
  detail::check_precondition(
      u, [](const Rational& v) { return cmp(abs(v), make_rational(1, 2)) <= 0; },
      "double_stream: |value| > 1/2");
  auto p = std::make_unique<AffineProducer>(AffineProducer::Mode::scan_double, 0, u);
  if (auto v = u.known_value()) return DigitStream::from_producer(std::move(p), 2 * *v);
  return DigitStream::from_producer(std::move(p));
}

DigitStream quarter_shift(const DigitStream& u, int dir) {
  if (dir != 1 && dir != -1) throw std::invalid_argument("quarter_shift: dir must be +-1");
  auto p = std::make_unique<QuarterShiftProducer>(dir, u);
  if (auto v = u.known_value()) {
    return DigitStream::from_producer(std::move(p), *v / 2 + Rational(dir) / 4);
  }
  return DigitStream::from_producer(std::move(p));
}

DigitStream average(const DigitStream& u, const DigitStream& v) {
  auto known = combined_known(u, v, [](const Rational& a, const Rational& b) {
    return Rational((a + b) / 2);
  });
  auto p = std::make_unique<AverageProducer>(u, v);
  if (known) return DigitStream::from_producer(std::move(p), *known);
  return DigitStream::from_producer(std::move(p));
}

DigitStream divide(const DigitStream& u, const DigitStream& v) {
  detail::check_precondition(
      v, [](const Rational& y) { return cmp(y, make_rational(1, 4)) >= 0; },
      "divide: divisor below 1/4");
  if (precondition_checks_enabled()) {
    auto a = u.known_value();
    auto b = v.known_value();
    if (a && b && cmp(abs(*a), *b) > 0) {
      throw PreconditionError("divide: |numerator| > denominator");
    }
  }
  DigitStream out = cauchy_to_stream(div_cauchy(stream_to_cauchy(u), stream_to_cauchy(v)));
  auto known = combined_known(u, v, [](const Rational& a, const Rational& b) {
    return Rational(a / b);
  });
  if (known) return out.with_known_value(*known);
  return out;
}

IntervalClass triple_cases(const DigitStream& u) {
  int d1 = to_int(u.at(0));
  int d2 = to_int(u.at(1));
  int d3 = to_int(u.at(2));
  if (d1 == 0 && d2 == 0) return IntervalClass::middle;
  if (d1 == 1) {
    if (d2 >= 0) return IntervalClass::upper;
    return d3 == -1 ? IntervalClass::middle : IntervalClass::upper;  // d2 == -1
  }
  if (d1 == -1) {
    if (d2 <= 0) return IntervalClass::lower;
    return d3 == 1 ? IntervalClass::middle : IntervalClass::lower;  // d2 == 1
  }
  // d1 == 0, d2 != 0
  if (d2 == 1) return d3 == -1 ? IntervalClass::middle : IntervalClass::upper;
  return d3 == 1 ? IntervalClass::middle : IntervalClass::lower;  // d2 == -1
}

}  // namespace sdreal
