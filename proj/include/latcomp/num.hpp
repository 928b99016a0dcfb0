#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "latcomp/error.hpp"

namespace latcomp::num {

// All integer quantities live in BigInt and all ratios in Rat.  Rat values
// are kept canonical (lowest terms, positive denominator) by construction.
using BigInt = mpz_class;
using Rat = mpq_class;

// ---- construction / text ----

// Strict decimal integer parse ("-?[0-9]+"); ParseError otherwise.
BigInt bigint_from_string(std::string_view s);

// Accepts "a" or "a/b" with decimal a, b and b != 0; result canonical.
Rat rat_from_string(std::string_view s);

std::string to_string(const BigInt& v);
// Canonical "num/den" form, including den == 1 (e.g. "5/1").
std::string to_string(const Rat& v);

// num/den with den != 0, canonicalized.
Rat make_rat(BigInt num, BigInt den);

// ---- elementary exact ops ----

BigInt pow2z(unsigned long e);            // 2^e
Rat pow2q(long e);                        // 2^e, e may be negative
BigInt ipow(const BigInt& base, unsigned long e);

BigInt rational_floor(const Rat& x);
BigInt rational_ceil(const Rat& x);

// Nearest integer with ties rounded down: w = ceil(x - 1/2), so that the
// residual x - w always lies in (-1/2, 1/2].
BigInt round_nearest(const Rat& x);

// Largest e with 2^e <= x; requires x > 0.
long floor_log2(const Rat& x);

// Serialized size of one integer in the size-report metric:
// ceil(log2(|v|+1)) + 1 (one sign bit; v == 0 costs 1 bit).
unsigned long bit_size(const BigInt& v);
// num plus den.
unsigned long bit_size(const Rat& v);

// ---- exact roots ----

BigInt isqrt_floor(const BigInt& x);      // x >= 0
BigInt isqrt_ceil(const BigInt& x);       // x >= 0
// Smallest integer k >= 0 with k^2 >= x (x >= 0 rational).
BigInt sqrt_ceil_int(const Rat& x);
// Smallest integer k >= 0 with k^p >= x.
BigInt root_ceil_int(const Rat& x, unsigned long p);

// Dyadic bounds on x^(1/p) with 2^-frac_bits resolution; x >= 0.
// root_upper >= x^(1/p), root_lower <= x^(1/p).
Rat root_upper(const Rat& x, unsigned long p, unsigned frac_bits);
Rat root_lower(const Rat& x, unsigned long p, unsigned frac_bits);
Rat sqrt_upper(const Rat& x, unsigned frac_bits);

// ceil((log2 x)^2) for integer x >= 1, computed by exact dyadic interval
// extraction of the binary log; ambiguous intervals round up (safe: a larger
// value only widens the prime range).
unsigned long ceil_log2_squared(const BigInt& x);

// ---- randomness ----

// Deterministic xoshiro256** stream.  All library randomness flows from one
// seed; substreams are derived by hashing (seed, label, index) so that
// repeated runs with equal arguments reproduce byte-identical results.
class Rng {
  public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    // Uniform in [lo, hi], both inclusive; requires lo <= hi.
    uint64_t uniform_u64(uint64_t lo, uint64_t hi);
    BigInt uniform_bigint(const BigInt& lo, const BigInt& hi);

    Rng derive(std::string_view label, uint64_t index = 0) const;
    uint64_t seed() const { return seed_; }

  private:
    uint64_t seed_;
    uint64_t s_[4];
};

// ---- primality ----

// Miller-Rabin with `rounds` pseudorandom bases derived deterministically
// from n.  Composite inputs pass with probability <= 4^-rounds; primes are
// always accepted.
bool is_probable_prime(const BigInt& n, int rounds = 64);

struct PrimeSampleOptions {
    int mr_rounds = 64;
    // 0 = auto: 256 * bit length of hi.
    uint64_t max_attempts = 0;
};

// Uniform rejection sampling over [lo, hi] (inclusive); GuardError once the
// attempt budget is exhausted (e.g. a prime-free interval).
BigInt sample_prime(const BigInt& lo, const BigInt& hi, Rng& rng,
                    const PrimeSampleOptions& opt = {});

} // namespace latcomp::num
