#include "sdreal/limit.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "sdreal/convert.hpp"
#include "sdreal/stream_ops.hpp"

namespace sdreal {

namespace {

// Per-index memo so the pivot stream inspected for classification is the
// same object the rescaled sequence continues on.
class CachedSequence {
 public:
  explicit CachedSequence(StreamSequence f) : f_(std::move(f)) {}

  DigitStream get(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    auto [ins, _] = memo_.emplace(n, f_(n));
    return ins->second;
  }

 private:
  StreamSequence f_;
  std::map<std::uint64_t, DigitStream> memo_;
  std::mutex mu_;
};

using CachedSeqPtr = std::shared_ptr<CachedSequence>;

CachedSeqPtr cached(StreamSequence f) {
  return std::make_shared<CachedSequence>(std::move(f));
}

class DirectLimitProducer final : public DigitStream::Producer {
 public:
  DirectLimitProducer(Modulus M, StreamSequence F)
      : modulus_(std::move(M)), current_(cached(std::move(F))) {}

  SignedDigit next() override {
    std::uint64_t pivot = modulus_(4 + level_);
    CachedSeqPtr prev = current_;
    SignedDigit out;
    switch (triple_cases(prev->get(pivot))) {
      case IntervalClass::upper:
        out = SignedDigit::plus;
        current_ = cached([prev, pivot](std::uint64_t n) {
          return double_stream(double_stream(quarter_shift(prev->get(std::max(pivot, n)), -1)));
        });
        break;
      case IntervalClass::lower:
        out = SignedDigit::minus;
        current_ = cached([prev, pivot](std::uint64_t n) {
          return double_stream(double_stream(quarter_shift(prev->get(std::max(pivot, n)), +1)));
        });
        break;
      case IntervalClass::middle:
        out = SignedDigit::zero;
        current_ = cached([prev, pivot](std::uint64_t n) {
          return double_stream(prev->get(std::max(pivot, n)));
        });
        break;
    }
    ++level_;
    return out;
  }

 private:
  Modulus modulus_;
  std::uint64_t level_ = 0;  // the level-j modulus is p -> M(p + j)
  CachedSeqPtr current_;
};

}  // namespace

DigitStream direct_limit(Modulus M, StreamSequence F) {
  return DigitStream::from_producer(
      std::make_unique<DirectLimitProducer>(std::move(M), std::move(F)));
}

namespace detail {

CauchyReal indirect_limit_cauchy(Modulus M, StreamSequence F) {
  auto xs = cached(std::move(F));
  return complete(
      [xs](std::uint64_t n) { return stream_to_cauchy(xs->get(n)); },
      [M](std::uint64_t p) { return M(p + 1); });
}

}  // namespace detail

DigitStream indirect_limit(Modulus M, StreamSequence F) {
  return cauchy_to_stream(detail::indirect_limit_cauchy(std::move(M), std::move(F)));
}

}  // namespace sdreal
