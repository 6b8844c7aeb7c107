#pragma once

// Exact rational scalars and the textual wire format used everywhere else.
//
// All arithmetic in this library is exact: scalars are GMP rationals, printed
// and parsed as "p/q" with q > 0 and gcd(p,q) = 1, or plain "p" for integers.
// No routine anywhere converts to floating point.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace logfano {

using Rat = mpq_class;
using Int = mpz_class;

// q = num/den, canonicalized. den must be nonzero.
Rat make_rat(long num, long den);

// Canonical text form: "p/q" with q > 0 and gcd(p,q) = 1, or "p" when q = 1.
std::string rat_to_string(const Rat& q);

// Inverse of rat_to_string. Accepts optional sign, "p", or "p/q" (q > 0 after
// normalization). Throws std::invalid_argument on malformed input or q = 0.
Rat parse_rational(const std::string& text);

// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
Int binomial(long n, long k);

// Deterministic rational sampler.
//
// mt19937_64 raw output reduced by modulo: the engine's output sequence is
// fully specified by the C++ standard, so seeded runs reproduce across
// platforms (uniform_int_distribution would not guarantee that).
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform-ish integer in [lo, hi], lo <= hi.
  long next_int(long lo, long hi);

  // Rational with numerator in [-max_num, max_num] and denominator in
  // [1, max_den]. nonzero = true redraws until the value is nonzero.
  Rat next_rational(long max_num, long max_den, bool nonzero = false);

  // Strictly positive rational with numerator in [1, max_num].
  Rat next_positive(long max_num, long max_den);

 private:
  std::mt19937_64 rng_;
};

// The seed used by every sampling entry point unless overridden (CLI --seed
// beats the LOGFANO_SEED environment variable, which beats this constant).
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Resolves the effective seed: explicit value if provided, else LOGFANO_SEED
// from the environment, else kDefaultSeed.
std::uint64_t resolve_seed(const std::uint64_t* explicit_seed = nullptr);

}  // namespace logfano
