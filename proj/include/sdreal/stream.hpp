#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>

#include "sdreal/digits.hpp"
#include "sdreal/rational.hpp"

namespace sdreal {

// Raised when an internal invariant is broken (carry out of range, a
// benchmark result failing its own accuracy check, ...).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Raised by the optional debug cross-checks when a stream with a known
// rational value is fed to an operation whose semantic precondition it
// violates.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// Lazy, memoized, infinite sequence of signed digits denoting a real
// number in [-1, 1]. Copies of a stream share the same underlying cell
// chain: a digit is produced at most once and then cached, and a shared
// monotone counter records how many digits were ever forced through the
// root. tail() is a view one digit further into the same chain, so reads
// performed through it still count towards the root.
class DigitStream {
 public:
  class Producer {
   public:
    virtual ~Producer() = default;
    virtual SignedDigit next() = 0;
  };

  static DigitStream from_producer(std::unique_ptr<Producer> p);
  static DigitStream from_producer(std::unique_ptr<Producer> p, Rational known_value);

  SignedDigit head() const { return at(0); }
  DigitStream tail() const;
  std::pair<SignedDigit, DigitStream> destruct() const;

  // Digit at position i (0-based), forcing everything up to it.
  SignedDigit at(std::uint64_t i) const;

  DigitList prefix(std::uint64_t n) const;

  // Partial sum of the first n digits; |approx(n) - value| <= 2^-n.
  Rational approx(std::uint64_t n) const;

  // Digits ever forced in this stream's cell chain.
  std::uint64_t reads() const;

  // Exact value when this stream was built from a known rational
  // (adjusted for the handle's position in the chain).
  std::optional<Rational> known_value() const;

  // Attach the exact value to a freshly built stream (root handles only);
  // feeds the debug cross-checks downstream.
  DigitStream with_known_value(Rational v) const;

  DigitStream drop(std::uint64_t n) const;  // view n digits further in

 private:
  struct Node;
  DigitStream(std::shared_ptr<Node> n, std::uint64_t off) : node_(std::move(n)), offset_(off) {}
  std::shared_ptr<Node> node_;
  std::uint64_t offset_ = 0;
};

// Stream with head d and tail u; denotes (d + value(u)) / 2.
DigitStream cons_digit(SignedDigit d, const DigitStream& u);

// Infinite repetition of d; denotes d.
DigitStream const_stream(SignedDigit d);

// d * value(u): identity, constant zero, or digit-wise negation.
DigitStream sd_times(SignedDigit d, const DigitStream& u);

// Toggle the debug precondition cross-checks (on by default).
void set_precondition_checks(bool enabled);
bool precondition_checks_enabled();

namespace detail {
// Throws PreconditionError if checks are on, u has a known value and
// pred(value) is false.
template <typename Pred>
void check_precondition(const DigitStream& u, Pred&& pred, const char* what) {
  if (!precondition_checks_enabled()) return;
  if (auto v = u.known_value()) {
    if (!pred(*v)) throw PreconditionError(what);
  }
}
}  // namespace detail

}  // namespace sdreal
