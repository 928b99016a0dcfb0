#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "latcomp/num.hpp"

using namespace latcomp;
using num::BigInt;
using num::Rat;

TEST_CASE("integer parsing is strict decimal") {
    CHECK(num::bigint_from_string("123") == 123);
    CHECK(num::bigint_from_string("-45") == -45);
    CHECK(num::bigint_from_string("0") == 0);
    CHECK_THROWS_AS(num::bigint_from_string(""), ParseError);
    CHECK_THROWS_AS(num::bigint_from_string("12a"), ParseError);
    CHECK_THROWS_AS(num::bigint_from_string("+5"), ParseError);
    CHECK_THROWS_AS(num::bigint_from_string("1 2"), ParseError);
    CHECK_THROWS_AS(num::bigint_from_string("-"), ParseError);
}

TEST_CASE("rational parsing canonicalizes") {
    CHECK(num::rat_from_string("3/6") == Rat(1, 2));
    CHECK(num::rat_from_string("5") == 5);
    CHECK(num::rat_from_string("-4/8") == Rat(-1, 2));
    CHECK_THROWS_AS(num::rat_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(num::rat_from_string("1/"), ParseError);
    CHECK_THROWS_AS(num::rat_from_string("a/2"), ParseError);

    CHECK(num::to_string(Rat(5)) == "5/1");
    CHECK(num::to_string(num::make_rat(BigInt(2), BigInt(4))) == "1/2");
    // negative denominators normalize to positive
    CHECK(num::make_rat(BigInt(1), BigInt(-2)) == Rat(-1, 2));
    CHECK_THROWS_AS(num::make_rat(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("powers and floors") {
    CHECK(num::pow2z(10) == 1024);
    CHECK(num::pow2q(-3) == Rat(1, 8));
    CHECK(num::pow2q(4) == 16);
    CHECK(num::ipow(BigInt(3), 4) == 81);
    CHECK(num::ipow(BigInt(-2), 3) == -8);
    CHECK(num::ipow(BigInt(7), 0) == 1);

    CHECK(num::rational_floor(Rat(7, 2)) == 3);
    CHECK(num::rational_ceil(Rat(7, 2)) == 4);
    CHECK(num::rational_floor(Rat(-7, 2)) == -4);
    CHECK(num::rational_ceil(Rat(-7, 2)) == -3);
    CHECK(num::rational_floor(Rat(4)) == 4);
    CHECK(num::rational_ceil(Rat(4)) == 4);
}

TEST_CASE("round_nearest rounds ties down") {
    CHECK(num::round_nearest(Rat(3, 5)) == 1);
    CHECK(num::round_nearest(Rat(1, 2)) == 0);
    CHECK(num::round_nearest(Rat(-6, 5)) == -1);
    CHECK(num::round_nearest(Rat(-1, 2)) == -1);
    CHECK(num::round_nearest(Rat(3, 2)) == 1);
    CHECK(num::round_nearest(Rat(0)) == 0);
    // the residual convention: x - round_nearest(x) in (-1/2, 1/2]
    for (int a = -8; a <= 8; ++a) {
        Rat x(a, 3);
        Rat res = x - Rat(num::round_nearest(x));
        CHECK(res > Rat(-1, 2));
        CHECK(res <= Rat(1, 2));
    }
}

TEST_CASE("floor_log2 on rationals") {
    CHECK(num::floor_log2(Rat(8)) == 3);
    CHECK(num::floor_log2(Rat(9, 2)) == 2);
    CHECK(num::floor_log2(Rat(1, 3)) == -2);
    CHECK(num::floor_log2(Rat(1)) == 0);
    CHECK(num::floor_log2(Rat(1, 2)) == -1);
    CHECK_THROWS_AS(num::floor_log2(Rat(0)), DomainError);
    CHECK_THROWS_AS(num::floor_log2(Rat(-3)), DomainError);
}

TEST_CASE("bit_size metric") {
    CHECK(num::bit_size(BigInt(0)) == 1);
    CHECK(num::bit_size(BigInt(1)) == 2);
    CHECK(num::bit_size(BigInt(7)) == 4);
    CHECK(num::bit_size(BigInt(8)) == 5);
    CHECK(num::bit_size(BigInt(-8)) == 5);
    CHECK(num::bit_size(Rat(3, 4)) == num::bit_size(BigInt(3)) + num::bit_size(BigInt(4)));
}

TEST_CASE("exact square and p-th roots") {
    CHECK(num::isqrt_floor(BigInt(10)) == 3);
    CHECK(num::isqrt_ceil(BigInt(10)) == 4);
    CHECK(num::isqrt_ceil(BigInt(9)) == 3);
    CHECK(num::isqrt_floor(BigInt(0)) == 0);
    CHECK(num::sqrt_ceil_int(Rat(17, 4)) == 3);
    CHECK(num::sqrt_ceil_int(Rat(4)) == 2);
    CHECK(num::root_ceil_int(Rat(80), 4) == 3);
    CHECK(num::root_ceil_int(Rat(81), 4) == 3);
    CHECK(num::root_ceil_int(Rat(82), 4) == 4);
}

TEST_CASE("dyadic root bounds bracket the true root") {
    struct Case {
        Rat x;
        unsigned long p;
    };
    const Case cases[] = {{Rat(16), 4}, {Rat(2), 2},      {Rat(17, 3), 2},
                          {Rat(1000), 6}, {Rat(1, 7), 4}, {Rat(0), 2}};
    for (const auto& c : cases) {
        for (unsigned frac : {8u, 32u}) {
            Rat hi = num::root_upper(c.x, c.p, frac);
            Rat lo = num::root_lower(c.x, c.p, frac);
            CHECK(lo >= 0);
            CHECK(hi >= lo);
            // bracketing: lo^p <= x <= hi^p
            Rat hip = 1, lop = 1;
            for (unsigned long i = 0; i < c.p; ++i) {
                hip *= hi;
                lop *= lo;
            }
            CHECK(lop <= c.x);
            CHECK(hip >= c.x);
            // resolution: the bounds are within one dyadic step of each other
            CHECK(hi - lo <= num::pow2q(-long(frac)) * 2);
        }
    }
    // exact powers are pinned tightly
    CHECK(num::root_upper(Rat(16), 4, 8) >= 2);
    CHECK(num::root_upper(Rat(16), 4, 8) <= Rat(2) + Rat(1, 128));
    CHECK(num::sqrt_upper(Rat(4), 8) >= 2);
    CHECK(num::sqrt_upper(Rat(4), 8) <= Rat(2) + Rat(1, 128));
}

TEST_CASE("ceil_log2_squared") {
    CHECK(num::ceil_log2_squared(BigInt(1)) == 0);
    CHECK(num::ceil_log2_squared(BigInt(2)) == 1);
    CHECK(num::ceil_log2_squared(BigInt(3)) == 3);  // (log2 3)^2 = 2.51..
    CHECK(num::ceil_log2_squared(BigInt(8)) == 9);
    CHECK(num::ceil_log2_squared(BigInt(1024)) == 100);
    CHECK_THROWS_AS(num::ceil_log2_squared(BigInt(0)), DomainError);
}

TEST_CASE("rng determinism and ranges") {
    num::Rng a(42), b(42), c(43);
    bool same = true, diff = false;
    for (int i = 0; i < 16; ++i) {
        uint64_t va = a.next_u64();
        same = same && va == b.next_u64();
        diff = diff || va != c.next_u64();
    }
    CHECK(same);
    CHECK(diff);

    num::Rng d1 = num::Rng(42).derive("x"), d2 = num::Rng(42).derive("x");
    num::Rng d3 = num::Rng(42).derive("y"), d4 = num::Rng(42).derive("x", 1);
    CHECK(d1.next_u64() == d2.next_u64());
    CHECK(num::Rng(42).derive("x").next_u64() != d3.next_u64());
    CHECK(num::Rng(42).derive("x").next_u64() != d4.next_u64());

    num::Rng r(7);
    for (int i = 0; i < 200; ++i) {
        uint64_t v = r.uniform_u64(5, 9);
        CHECK(v >= 5);
        CHECK(v <= 9);
    }
    std::set<std::string> seen;
    for (int i = 0; i < 200; ++i) {
        BigInt v = r.uniform_bigint(BigInt(-3), BigInt(3));
        CHECK(v >= -3);
        CHECK(v <= 3);
        seen.insert(v.get_str());
    }
    CHECK(seen.size() == 7); // all residues hit over 200 draws
    CHECK(r.uniform_bigint(BigInt(12), BigInt(12)) == 12);
}

TEST_CASE("primality testing") {
    CHECK(num::is_probable_prime(BigInt(2)));
    CHECK(num::is_probable_prime(BigInt(3)));
    CHECK(num::is_probable_prime(BigInt(97)));
    CHECK_FALSE(num::is_probable_prime(BigInt(1)));
    CHECK_FALSE(num::is_probable_prime(BigInt(0)));
    CHECK_FALSE(num::is_probable_prime(BigInt(-7)));
    CHECK_FALSE(num::is_probable_prime(BigInt(561)));    // Carmichael
    CHECK_FALSE(num::is_probable_prime(BigInt("341550071728321")));
    // 2^61 - 1 is a Mersenne prime
    CHECK(num::is_probable_prime(num::pow2z(61) - 1));
    CHECK_FALSE(num::is_probable_prime(num::pow2z(67) - 1));
}

TEST_CASE("prime sampling") {
    num::Rng rng(11);
    CHECK(num::sample_prime(BigInt(7), BigInt(7), rng) == 7);
    CHECK_THROWS_AS(num::sample_prime(BigInt(14), BigInt(16), rng), GuardError);
    CHECK_THROWS_AS(num::sample_prime(BigInt(5), BigInt(3), rng), DomainError);
    for (int i = 0; i < 5; ++i) {
        BigInt p = num::sample_prime(num::pow2z(20), num::pow2z(21), rng);
        CHECK(p >= num::pow2z(20));
        CHECK(p <= num::pow2z(21));
        CHECK(num::is_probable_prime(p));
    }
    // determinism: equal seeds draw the same prime
    num::Rng r1(5), r2(5);
    CHECK(num::sample_prime(num::pow2z(40), num::pow2z(41), r1) ==
          num::sample_prime(num::pow2z(40), num::pow2z(41), r2));
}
