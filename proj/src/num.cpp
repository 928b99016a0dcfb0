#include "latcomp/num.hpp"

#include <array>
#include <cstring>
#include <vector>

namespace latcomp::num {

namespace {

bool valid_int_text(std::string_view s) {
    if (s.empty())
        return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

} // namespace

BigInt bigint_from_string(std::string_view s) {
    if (!valid_int_text(s))
        throw ParseError("bad integer literal: '" + std::string(s) + "'");
    BigInt v;
    mpz_set_str(v.get_mpz_t(), std::string(s).c_str(), 10);
    return v;
}

Rat rat_from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rat(bigint_from_string(s));
    BigInt n = bigint_from_string(s.substr(0, slash));
    BigInt d = bigint_from_string(s.substr(slash + 1));
    if (d == 0)
        throw ParseError("rational text with zero denominator");
    return make_rat(n, d);
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat make_rat(BigInt num, BigInt den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rat r;
    mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
    r.canonicalize();
    return r;
}

BigInt pow2z(unsigned long e) {
    BigInt v;
    mpz_setbit(v.get_mpz_t(), e);
    return v;
}

Rat pow2q(long e) {
    if (e >= 0)
        return Rat(pow2z(static_cast<unsigned long>(e)));
    return make_rat(1, pow2z(static_cast<unsigned long>(-e)));
}

BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt v;
    mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), e);
    return v;
}

BigInt rational_floor(const Rat& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

BigInt rational_ceil(const Rat& x) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

BigInt round_nearest(const Rat& x) {
    // ceil((2 num - den) / (2 den)); residual lands in (-1/2, 1/2].
    BigInt n2 = 2 * x.get_num();
    n2 -= x.get_den();
    BigInt d2 = 2 * x.get_den();
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
    return q;
}

namespace {

// sign of (a - b * 2^e), a, b > 0
int cmp_shifted(const BigInt& a, const BigInt& b, long e) {
    BigInt t;
    if (e >= 0) {
        mpz_mul_2exp(t.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
        return mpz_cmp(a.get_mpz_t(), t.get_mpz_t());
    }
    mpz_mul_2exp(t.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(-e));
    return mpz_cmp(t.get_mpz_t(), b.get_mpz_t());
}

} // namespace

long floor_log2(const Rat& x) {
    if (x <= 0)
        throw DomainError("floor_log2 requires a positive argument");
    const BigInt a = x.get_num();
    const BigInt b = x.get_den();
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
    while (cmp_shifted(a, b, e) < 0)
        --e;
    while (cmp_shifted(a, b, e + 1) >= 0)
        ++e;
    return e;
}

unsigned long bit_size(const BigInt& v) {
    if (v == 0)
        return 1;
    return mpz_sizeinbase(v.get_mpz_t(), 2) + 1;
}

unsigned long bit_size(const Rat& v) {
    return bit_size(BigInt(v.get_num())) + bit_size(BigInt(v.get_den()));
}

BigInt isqrt_floor(const BigInt& x) {
    if (x < 0)
        throw DomainError("isqrt of a negative value");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

BigInt isqrt_ceil(const BigInt& x) {
    BigInt r = isqrt_floor(x);
    if (r * r < x)
        ++r;
    return r;
}

BigInt sqrt_ceil_int(const Rat& x) { return root_ceil_int(x, 2); }

BigInt root_ceil_int(const Rat& x, unsigned long p) {
    if (x < 0 || p == 0)
        throw DomainError("root_ceil_int requires x >= 0 and p >= 1");
    if (x == 0)
        return 0;
    BigInt c = rational_ceil(x);
    BigInt r;
    mpz_root(r.get_mpz_t(), c.get_mpz_t(), p);
    if (ipow(r, p) < c)
        ++r;
    while (r > 0 && ipow(r - 1, p) >= x)
        --r;
    return r;
}

Rat root_upper(const Rat& x, unsigned long p, unsigned frac_bits) {
    if (x < 0 || p == 0)
        throw DomainError("root_upper requires x >= 0 and p >= 1");
    Rat scaled = x * pow2q(static_cast<long>(p) * frac_bits);
    BigInt r = root_ceil_int(scaled, p);
    return make_rat(r, pow2z(frac_bits));
}

Rat root_lower(const Rat& x, unsigned long p, unsigned frac_bits) {
    if (x < 0 || p == 0)
        throw DomainError("root_lower requires x >= 0 and p >= 1");
    Rat scaled = x * pow2q(static_cast<long>(p) * frac_bits);
    BigInt f = rational_floor(scaled);
    BigInt r;
    mpz_root(r.get_mpz_t(), f.get_mpz_t(), p);
    return make_rat(r, pow2z(frac_bits));
}

Rat sqrt_upper(const Rat& x, unsigned frac_bits) { return root_upper(x, 2, frac_bits); }

unsigned long ceil_log2_squared(const BigInt& x) {
    if (x < 1)
        throw DomainError("ceil_log2_squared requires x >= 1");
    if (x == 1)
        return 0;
    const unsigned long k = mpz_sizeinbase(x.get_mpz_t(), 2) - 1; // floor(log2 x)
    if (mpz_popcount(x.get_mpz_t()) == 1)
        return k * k;

    // x = 2^k * y with y in (1, 2); extract binary digits of g = log2(y) by
    // exact interval squaring at F fractional bits.
    constexpr unsigned long F = 256;
    constexpr unsigned long kMaxSteps = 120;
    BigInt one_f = pow2z(F);
    BigInt two_f = pow2z(F + 1);
    // y as an exact dyadic number when k <= F, else a 1-ulp interval.
    BigInt lo, hi;
    if (k <= F) {
        mpz_mul_2exp(lo.get_mpz_t(), x.get_mpz_t(), F - k);
        hi = lo;
    } else {
        mpz_fdiv_q_2exp(lo.get_mpz_t(), x.get_mpz_t(), k - F);
        hi = lo + 1;
    }

    BigInt gbits = 0;
    unsigned long t = 0;
    while (t < kMaxSteps) {
        // square the interval
        BigInt l2 = lo * lo;
        mpz_fdiv_q_2exp(lo.get_mpz_t(), l2.get_mpz_t(), F);
        BigInt h2 = hi * hi;
        mpz_cdiv_q_2exp(hi.get_mpz_t(), h2.get_mpz_t(), F);
        ++hi;
        ++t;
        if (hi < two_f) {
            gbits <<= 1;
        } else if (lo >= two_f) {
            gbits <<= 1;
            gbits |= 1;
            mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), 1);
            BigInt h1 = hi + 1;
            mpz_fdiv_q_2exp(hi.get_mpz_t(), h1.get_mpz_t(), 1);
        } else {
            // undecided bit: rewind to the last confirmed digit
            --t;
            break;
        }
    }
    // After t confirmed digits, g lies in [gbits/2^t, gbits/2^t + 2^-t].
    Rat glo = make_rat(gbits, pow2z(t));
    Rat w = pow2q(-static_cast<long>(t));
    Rat ghi = glo + w;
    if (ghi > 1)
        ghi = 1;
    Rat kk(static_cast<unsigned long>(k));
    Rat hlo = 2 * kk * glo + glo * glo;
    Rat hhi = 2 * kk * ghi + ghi * ghi;
    BigInt clo = rational_ceil(hlo);
    BigInt chi = rational_ceil(hhi);
    // h = (log2 x)^2 - k^2 is never an integer here (x is not a power of 2),
    // so when the interval pins one ceiling value it is exact; otherwise
    // round up (a larger alpha only strengthens the prime range).
    BigInt res = BigInt(k) * BigInt(k) + chi;
    if (clo == chi)
        res = BigInt(k) * BigInt(k) + clo;
    return mpz_get_ui(res.get_mpz_t());
}

// ---- Rng ----

namespace {

uint64_t splitmix64_next(uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t rotl64(uint64_t v, int r) { return (v << r) | (v >> (64 - r)); }

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

Rng::Rng(uint64_t seed) : seed_(seed) {
    uint64_t s = seed;
    bool all_zero = true;
    for (auto& w : s_) {
        w = splitmix64_next(s);
        all_zero = all_zero && w == 0;
    }
    if (all_zero)
        s_[0] = 1;
}

uint64_t Rng::next_u64() {
    const uint64_t result = rotl64(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl64(s_[3], 45);
    return result;
}

uint64_t Rng::uniform_u64(uint64_t lo, uint64_t hi) {
    if (lo > hi)
        throw DomainError("uniform_u64: empty range");
    const uint64_t span = hi - lo + 1;
    if (span == 0) // full 64-bit range
        return next_u64();
    const uint64_t bound = (UINT64_MAX / span) * span;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= bound);
    return lo + x % span;
}

BigInt Rng::uniform_bigint(const BigInt& lo, const BigInt& hi) {
    if (lo > hi)
        throw DomainError("uniform_bigint: empty range");
    BigInt span = hi - lo + 1;
    if (span == 1)
        return lo;
    const size_t bits = mpz_sizeinbase(span.get_mpz_t(), 2);
    const size_t words = (bits + 63) / 64;
    std::vector<uint64_t> buf(words);
    BigInt x;
    for (;;) {
        for (auto& w : buf)
            w = next_u64();
        mpz_import(x.get_mpz_t(), words, -1, sizeof(uint64_t), 0, 0, buf.data());
        mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
        if (x < span)
            return lo + x;
    }
}

Rng Rng::derive(std::string_view label, uint64_t index) const {
    uint64_t h = fnv1a(label);
    uint64_t s = mix64(seed_ ^ h);
    s = mix64(s ^ (index + 0x9E3779B97F4A7C15ULL));
    return Rng(s);
}

// ---- primality ----

namespace {

// Primes below 1024, sieved once; used for trial division on small inputs and
// as a gcd prefilter (via their product) on large ones.
const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        constexpr unsigned long kLimit = 1024;
        std::vector<bool> composite(kLimit, false);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i < kLimit; ++i) {
            if (composite[i])
                continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j < kLimit; j += i)
                composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

const BigInt& small_primorial() {
    static const BigInt product = [] {
        BigInt r = 1;
        for (unsigned long p : small_primes())
            r *= static_cast<unsigned long>(p);
        return r;
    }();
    return product;
}

uint64_t limb_hash(const BigInt& n) {
    uint64_t h = 1469598103934665603ULL;
    const size_t limbs = mpz_size(n.get_mpz_t());
    for (size_t i = 0; i < limbs; ++i) {
        h ^= static_cast<uint64_t>(mpz_getlimbn(n.get_mpz_t(), i));
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

bool is_probable_prime(const BigInt& n, int rounds) {
    if (rounds < 1)
        rounds = 1;
    if (n < 2)
        return false;
    if (n < 1024 * 1024) {
        // trial division by primes < 1024 decides n < 1024^2 completely
        for (unsigned long p : small_primes()) {
            if (n == p)
                return true;
            if (mpz_divisible_ui_p(n.get_mpz_t(), p))
                return false;
            if (BigInt(p) * p > n)
                return true;
        }
        return true;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), small_primorial().get_mpz_t());
    if (g != 1)
        return false;
    // n has no factor below 1024: strong probable prime test, bases derived
    // from n so the function is pure.
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    Rng base_rng(mix64(limb_hash(n) ^ 0xC2B2AE3D27D4EB4FULL));
    const BigInt n_1 = n - 1;
    BigInt a, y;
    for (int round = 0; round < rounds; ++round) {
        a = base_rng.uniform_bigint(2, n - 2);
        mpz_powm(y.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (y == 1 || y == n_1)
            continue;
        bool witness = true;
        for (unsigned long i = 0; i + 1 < s; ++i) {
            mpz_powm_ui(y.get_mpz_t(), y.get_mpz_t(), 2, n.get_mpz_t());
            if (y == n_1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

BigInt sample_prime(const BigInt& lo, const BigInt& hi, Rng& rng,
                    const PrimeSampleOptions& opt) {
    if (lo > hi)
        throw DomainError("sample_prime: empty range");
    uint64_t budget = opt.max_attempts;
    if (budget == 0)
        budget = 256 * static_cast<uint64_t>(mpz_sizeinbase(hi.get_mpz_t(), 2));
    for (uint64_t attempt = 0; attempt < budget; ++attempt) {
        BigInt c = rng.uniform_bigint(lo, hi);
        if (is_probable_prime(c, opt.mr_rounds))
            return c;
    }
    throw GuardError("sample_prime: no prime found in [" + to_string(lo) + ", " +
                     to_string(hi) + "] after " + std::to_string(budget) +
                     " attempts");
}

} // namespace latcomp::num
