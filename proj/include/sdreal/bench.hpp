#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdreal/stream.hpp"

namespace sdreal {

struct BenchResult {
  std::string algorithm;
  std::string param;            // modulus name or digit count tag
  std::uint64_t digits = 0;
  double seconds = 0;           // median over trials, warm-up discarded
  std::uint64_t max_lookahead = 0;  // max digits read from any input stream
  std::uint64_t trials = 0;
};

// CSV with the fixed header algorithm,param,digits,seconds,max_lookahead,trials.
void write_csv(std::ostream& os, const std::vector<BenchResult>& rows);

// Pseudo-random digit stream from a 64-bit linear congruential generator,
// digits taken from the high bits mod 3. Reproducible across platforms.
DigitStream random_digit_stream(std::uint64_t seed);

// Both limit operators on the constant-zero sequence under the moduli
// p, p^2, p^3. Each output is verified to be within 2^-digits of 0
// before its timing is reported.
std::vector<BenchResult> bench_constant(std::uint64_t digits, std::uint64_t trials);

// Geometric sequence us(0) = 0::u, us(n+1) = mult_via_cauchy(0::u, us(n))
// for a seeded random u, run through both limit operators with the
// identity modulus. The limit is 0; outputs are verified against that.
std::vector<BenchResult> bench_geometric(std::uint64_t digits, std::uint64_t trials,
                                         std::uint64_t seed);

// The three multiplication routes on seeded random stream pairs; all
// three outputs must agree pairwise within 2 * 2^-digits.
std::vector<BenchResult> bench_mult(std::uint64_t digits, std::uint64_t trials,
                                    std::uint64_t seed);

}  // namespace sdreal
