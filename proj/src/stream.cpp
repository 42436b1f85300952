#include "sdreal/stream.hpp"

#include <atomic>
#include <mutex>
#include <vector>

namespace sdreal {

namespace {
std::atomic<bool> g_precondition_checks{true};
}  // namespace

void set_precondition_checks(bool enabled) { g_precondition_checks.store(enabled); }
bool precondition_checks_enabled() { return g_precondition_checks.load(); }

struct DigitStream::Node {
  explicit Node(std::unique_ptr<Producer> p) : producer(std::move(p)) {}

  std::mutex mu;
  std::vector<std::int8_t> digits;
  std::unique_ptr<Producer> producer;
  std::atomic<std::uint64_t> forced{0};
  std::optional<Rational> origin_value;

  // Ensures digits[0..i] exist. Producing a digit may pull on other
  // streams; the demand graph is acyclic, so nested locking is safe.
  SignedDigit at(std::uint64_t i) {
    std::lock_guard<std::mutex> lock(mu);
    while (digits.size() <= i) {
      digits.push_back(static_cast<std::int8_t>(to_int(producer->next())));
      forced.store(digits.size(), std::memory_order_release);
    }
    return static_cast<SignedDigit>(digits[static_cast<std::size_t>(i)]);
  }
};

DigitStream DigitStream::from_producer(std::unique_ptr<Producer> p) {
  return DigitStream(std::make_shared<Node>(std::move(p)), 0);
}

DigitStream DigitStream::from_producer(std::unique_ptr<Producer> p, Rational known_value) {
  auto n = std::make_shared<Node>(std::move(p));
  n->origin_value = std::move(known_value);
  return DigitStream(std::move(n), 0);
}

SignedDigit DigitStream::at(std::uint64_t i) const { return node_->at(offset_ + i); }

DigitStream DigitStream::tail() const { return DigitStream(node_, offset_ + 1); }

std::pair<SignedDigit, DigitStream> DigitStream::destruct() const {
  return {at(0), tail()};
}

DigitStream DigitStream::drop(std::uint64_t n) const { return DigitStream(node_, offset_ + n); }

DigitList DigitStream::prefix(std::uint64_t n) const {
  DigitList l;
  l.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) l.push_back(at(i));
  return l;
}

Rational DigitStream::approx(std::uint64_t n) const {
  if (n == 0) return Rational(0);
  mpz_class num(0);
  for (std::uint64_t i = 0; i < n; ++i) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 1);
    num += to_int(at(i));
  }
  return scale_pow2(Rational(num), -static_cast<long>(n));
}

std::uint64_t DigitStream::reads() const {
  return node_->forced.load(std::memory_order_acquire);
}

std::optional<Rational> DigitStream::known_value() const {
  if (!node_->origin_value) return std::nullopt;
  // Value seen from offset k: v_{i+1} = 2 v_i - d_i.
  Rational v = *node_->origin_value;
  for (std::uint64_t i = 0; i < offset_; ++i) {
    v = 2 * v - to_int(node_->at(i));
  }
  return v;
}

DigitStream DigitStream::with_known_value(Rational v) const {
  if (offset_ != 0) throw std::logic_error("with_known_value: not a root handle");
  node_->origin_value = std::move(v);
  return *this;
}

namespace {

class ConstProducer final : public DigitStream::Producer {
 public:
  explicit ConstProducer(SignedDigit d) : d_(d) {}
  SignedDigit next() override { return d_; }

 private:
  SignedDigit d_;
};

class ConsProducer final : public DigitStream::Producer {
 public:
  ConsProducer(SignedDigit d, DigitStream u) : d_(d), src_(std::move(u)) {}
  SignedDigit next() override {
    if (!emitted_) {
      emitted_ = true;
      return d_;
    }
    return src_.at(pos_++);
  }

 private:
  SignedDigit d_;
  DigitStream src_;
  std::uint64_t pos_ = 0;
  bool emitted_ = false;
};

class NegateProducer final : public DigitStream::Producer {
 public:
  explicit NegateProducer(DigitStream u) : src_(std::move(u)) {}
  SignedDigit next() override { return negate(src_.at(pos_++)); }

 private:
  DigitStream src_;
  std::uint64_t pos_ = 0;
};

}  // namespace

DigitStream cons_digit(SignedDigit d, const DigitStream& u) {
  auto known = u.known_value();
  auto p = std::make_unique<ConsProducer>(d, u);
  if (known) {
    return DigitStream::from_producer(std::move(p), (to_int(d) + *known) / 2);
  }
  return DigitStream::from_producer(std::move(p));
}

DigitStream const_stream(SignedDigit d) {
  return DigitStream::from_producer(std::make_unique<ConstProducer>(d), Rational(to_int(d)));
}

DigitStream sd_times(SignedDigit d, const DigitStream& u) {
  switch (d) {
    case SignedDigit::zero: return const_stream(SignedDigit::zero);
    case SignedDigit::plus: return u;
    case SignedDigit::minus: {
      auto known = u.known_value();
      auto p = std::make_unique<NegateProducer>(u);
      if (known) return DigitStream::from_producer(std::move(p), -*known);
      return DigitStream::from_producer(std::move(p));
    }
  }
  throw std::invalid_argument("sd_times: bad digit");
}

}  // namespace sdreal
