#include <doctest.h>

#include "latcomp/linalg.hpp"

using namespace latcomp;
using lin::ColsQ;
using lin::ColsZ;
using lin::VecQ;
using lin::VecZ;
using num::BigInt;
using num::Rat;

TEST_CASE("dot products and vector arithmetic") {
    VecQ a{Rat(1, 2), Rat(3), Rat(-2)};
    VecQ b{Rat(4), Rat(1, 3), Rat(5)};
    CHECK(lin::dot(a, b) == Rat(2) + Rat(1) - Rat(10));

    VecZ az{BigInt(2), BigInt(-3)};
    VecZ bz{BigInt(5), BigInt(7)};
    CHECK(lin::dot(az, bz) == -11);

    CHECK(lin::add(a, b) == VecQ{Rat(9, 2), Rat(10, 3), Rat(3)});
    CHECK(lin::sub(a, b) == VecQ{Rat(-7, 2), Rat(8, 3), Rat(-7)});
    CHECK(lin::sub(az, bz) == VecZ{BigInt(-3), BigInt(-10)});

    VecQ c = a;
    lin::submul(c, Rat(2), b); // c -= 2b
    CHECK(c == VecQ{Rat(-15, 2), Rat(7, 3), Rat(-12)});
    VecZ cz = az;
    lin::submul(cz, BigInt(-1), bz);
    CHECK(cz == VecZ{BigInt(7), BigInt(4)});
}

TEST_CASE("norms") {
    VecQ v{Rat(1, 2), Rat(-3)};
    CHECK(lin::norm2_sq(v) == Rat(37, 4));
    CHECK(lin::norm_pow(v, 2) == Rat(37, 4));
    CHECK(lin::norm_pow(v, 4) == Rat(1, 16) + Rat(81));
    VecZ w{BigInt(1), BigInt(0), BigInt(-1)};
    CHECK(lin::norm_pow(w, 2) == 2);
    CHECK(lin::norm_pow(w, 4) == 2);
    CHECK(lin::norm_pow(w, 6) == 2);
    CHECK(lin::is_zero(VecQ{Rat(0), Rat(0)}));
    CHECK_FALSE(lin::is_zero(v));
    CHECK(lin::is_zero(VecZ{BigInt(0)}));
}

TEST_CASE("integer/rational conversions") {
    VecZ w{BigInt(3), BigInt(-4)};
    VecQ q = lin::to_rat(w);
    CHECK(q == VecQ{Rat(3), Rat(-4)});
    CHECK(lin::to_int(q) == w);
    CHECK_THROWS_AS(lin::to_int(VecQ{Rat(1, 2)}), DomainError);

    ColsZ cz{{BigInt(1), BigInt(2)}, {BigInt(3), BigInt(4)}};
    ColsQ cq = lin::to_rat(cz);
    CHECK(lin::to_int(cq) == cz);
}

TEST_CASE("matrix-vector products") {
    // columns (1,2), (0,3): B z with z = (2, -1) is (2, 1)
    ColsQ cols{{Rat(1), Rat(2)}, {Rat(0), Rat(3)}};
    VecZ z{BigInt(2), BigInt(-1)};
    CHECK(lin::mul(cols, z) == VecQ{Rat(2), Rat(1)});
    ColsZ colsz{{BigInt(1), BigInt(2)}, {BigInt(0), BigInt(3)}};
    CHECK(lin::mul(colsz, z) == VecZ{BigInt(2), BigInt(1)});
}

TEST_CASE("rank by exact elimination") {
    ColsQ indep{{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
    CHECK(lin::rank(indep) == 2);
    ColsQ dep{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(lin::rank(dep) == 1);
    ColsQ tall{{Rat(1), Rat(0), Rat(2)}, {Rat(0), Rat(1), Rat(3)}};
    CHECK(lin::rank(tall) == 2);
}

TEST_CASE("exact linear solve") {
    ColsQ cols{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
    VecQ b{Rat(5), Rat(3)};
    auto x = lin::solve(cols, b);
    REQUIRE(x.has_value());
    CHECK(*x == VecQ{Rat(2), Rat(1)});

    // tall system: b outside the span has no solution
    ColsQ tall{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}};
    CHECK_FALSE(lin::solve(tall, VecQ{Rat(1), Rat(1), Rat(1)}).has_value());
    auto y = lin::solve(tall, VecQ{Rat(7), Rat(-2), Rat(0)});
    REQUIRE(y.has_value());
    CHECK(*y == VecQ{Rat(7), Rat(-2)});

    // fractional solution stays exact
    ColsQ half(1, VecQ{Rat(2)});
    auto s = lin::solve(half, VecQ{Rat(1)});
    REQUIRE(s.has_value());
    CHECK(*s == VecQ{Rat(1, 2)});
}
