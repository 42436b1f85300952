#include "sdreal/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <ostream>

#include "sdreal/apps.hpp"
#include "sdreal/convert.hpp"
#include "sdreal/limit.hpp"
#include "sdreal/stream_ops.hpp"

namespace sdreal {

namespace {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

 private:
  std::uint64_t state_;
};

class LcgDigitProducer final : public DigitStream::Producer {
 public:
  explicit LcgDigitProducer(std::uint64_t seed) : gen_(seed) {}
  SignedDigit next() override {
    return digit_from_int(static_cast<int>((gen_.next() >> 33) % 3) - 1);
  }

 private:
  Lcg gen_;
};

// Memoizes one stream per index and keeps every handle so the largest
// read count over all inputs can be reported afterwards.
class TrackedSequence {
 public:
  explicit TrackedSequence(std::function<DigitStream(std::uint64_t)> f) : f_(std::move(f)) {}

  DigitStream get(std::uint64_t n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    auto [ins, _] = memo_.emplace(n, f_(n));
    return ins->second;
  }

  std::uint64_t max_reads() const {
    std::uint64_t m = 0;
    for (const auto& [idx, s] : memo_) m = std::max(m, s.reads());
    return m;
  }

 private:
  std::function<DigitStream(std::uint64_t)> f_;
  std::map<std::uint64_t, DigitStream> memo_;
};

double measure_median(std::uint64_t trials, const std::function<double()>& run_once) {
  run_once();  // warm-up, discarded
  std::vector<double> times;
  times.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) times.push_back(run_once());
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

double timed(const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void require_close_to(const Rational& got, const Rational& want, const Rational& tol,
                      const char* what) {
  Rational diff(abs(got - want));
  if (cmp(diff, tol) > 0) throw InternalError(std::string("benchmark value check failed: ") + what);
}

}  // namespace

DigitStream random_digit_stream(std::uint64_t seed) {
  return DigitStream::from_producer(std::make_unique<LcgDigitProducer>(seed));
}

void write_csv(std::ostream& os, const std::vector<BenchResult>& rows) {
  os << "algorithm,param,digits,seconds,max_lookahead,trials\n";
  for (const auto& r : rows) {
    os << r.algorithm << ',' << r.param << ',' << r.digits << ',' << r.seconds << ','
       << r.max_lookahead << ',' << r.trials << '\n';
  }
}

std::vector<BenchResult> bench_constant(std::uint64_t digits, std::uint64_t trials) {
  struct Mod {
    const char* name;
    Modulus fn;
  };
  const Mod mods[] = {
      {"p", [](std::uint64_t p) { return p; }},
      {"p^2", [](std::uint64_t p) { return p * p; }},
      {"p^3", [](std::uint64_t p) { return p * p * p; }},
  };
  const Rational tol = pow2(-static_cast<long>(digits));

  std::vector<BenchResult> rows;
  for (bool direct : {true, false}) {
    for (const Mod& m : mods) {
      std::uint64_t lookahead = 0;
      auto run_once = [&]() {
        auto inputs = std::make_shared<TrackedSequence>(
            [](std::uint64_t) { return const_stream(SignedDigit::zero); });
        StreamSequence F = [inputs](std::uint64_t n) { return inputs->get(n); };
        DigitStream out = direct ? direct_limit(m.fn, F) : indirect_limit(m.fn, F);
        double s = timed([&] { out.prefix(digits); });
        require_close_to(out.approx(digits), Rational(0), tol, "constant-sequence limit");
        lookahead = inputs->max_reads();
        return s;
      };
      double sec = measure_median(trials, run_once);
      rows.push_back(BenchResult{direct ? "direct" : "indirect", m.name, digits, sec, lookahead,
                                 trials});
    }
  }
  return rows;
}

std::vector<BenchResult> bench_geometric(std::uint64_t digits, std::uint64_t trials,
                                         std::uint64_t seed) {
  const Rational tol = pow2(-static_cast<long>(digits));
  std::vector<BenchResult> rows;
  for (bool direct : {true, false}) {
    std::uint64_t lookahead = 0;
    auto run_once = [&]() {
      // us(0) = 0::u, us(n+1) = (0::u) * us(n); each power exists once.
      DigitStream base = cons_digit(SignedDigit::zero, random_digit_stream(seed));
      auto powers = std::make_shared<std::vector<DigitStream>>(1, base);
      StreamSequence F = [base, powers](std::uint64_t n) {
        while (powers->size() <= n) powers->push_back(mult_via_cauchy(base, powers->back()));
        return (*powers)[static_cast<std::size_t>(n)];
      };
      DigitStream out = direct ? direct_limit(identity_modulus(), F)
                               : indirect_limit(identity_modulus(), F);
      double s = timed([&] { out.prefix(digits); });
      require_close_to(out.approx(digits), Rational(0), tol, "geometric-sequence limit");
      lookahead = base.reads();
      for (const DigitStream& p : *powers) lookahead = std::max(lookahead, p.reads());
      return s;
    };
    double sec = measure_median(trials, run_once);
    rows.push_back(
        BenchResult{direct ? "direct" : "indirect", "id", digits, sec, lookahead, trials});
  }
  return rows;
}

std::vector<BenchResult> bench_mult(std::uint64_t digits, std::uint64_t trials,
                                    std::uint64_t seed) {
  struct Algo {
    const char* name;
    std::function<DigitStream(const DigitStream&, const DigitStream&)> fn;
  };
  const Algo algos[] = {
      {"cauchy", [](const DigitStream& a, const DigitStream& b) { return mult_via_cauchy(a, b); }},
      {"lim-direct",
       [](const DigitStream& a, const DigitStream& b) {
         return mult_via_limit(a, b, LimitKind::direct);
       }},
      {"lim-indirect",
       [](const DigitStream& a, const DigitStream& b) {
         return mult_via_limit(a, b, LimitKind::indirect);
       }},
  };
  const Rational tol = 2 * pow2(-static_cast<long>(digits));

  std::vector<BenchResult> rows;
  std::vector<Rational> approxes;
  for (const Algo& algo : algos) {
    std::uint64_t lookahead = 0;
    Rational last_approx;
    auto run_once = [&]() {
      DigitStream u = random_digit_stream(seed);
      DigitStream v = random_digit_stream(seed ^ 0x9e3779b97f4a7c15ULL);
      DigitStream out = algo.fn(u, v);
      double s = timed([&] { out.prefix(digits); });
      lookahead = std::max(u.reads(), v.reads());
      last_approx = out.approx(digits);
      return s;
    };
    double sec = measure_median(trials, run_once);
    approxes.push_back(last_approx);
    rows.push_back(BenchResult{algo.name, "id", digits, sec, lookahead, trials});
  }
  for (std::size_t i = 0; i < approxes.size(); ++i) {
    for (std::size_t j = i + 1; j < approxes.size(); ++j) {
      require_close_to(approxes[i], approxes[j], tol, "multiplication route agreement");
    }
  }
  return rows;
}

}  // namespace sdreal
