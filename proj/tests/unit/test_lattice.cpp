#include <doctest.h>

#include "latcomp/lattice.hpp"
#include "latcomp/num.hpp"

using namespace latcomp;
using lin::ColsQ;
using lin::ColsZ;
using lin::VecQ;
using lin::VecZ;
using num::BigInt;
using num::Rat;

namespace {

ColsZ rand_colsz(num::Rng& rng, size_t n, size_t m, long mag) {
    ColsZ cols(n, VecZ(m));
    for (auto& c : cols)
        for (auto& e : c)
            e = rng.uniform_bigint(BigInt(-mag), BigInt(mag));
    return cols;
}

} // namespace

TEST_CASE("basis validation") {
    CHECK_THROWS_AS(lat::Basis::make({}), DomainError);
    CHECK_THROWS_AS(lat::Basis::make({{Rat(1), Rat(0)}, {Rat(2), Rat(0)}}),
                    RankError);
    // more columns than rows can never be independent
    CHECK_THROWS_AS(lat::Basis::make({{Rat(1)}, {Rat(2)}}), Error);
    lat::Basis b = lat::Basis::make({{Rat(1), Rat(0)}, {Rat(1), Rat(1)}});
    CHECK(b.rank_n() == 2);
    CHECK(b.dim_m() == 2);
}

TEST_CASE("gap instance validation") {
    lat::Basis b = lat::Basis::make({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    lat::GapCvpInstance ok{b, {Rat(1, 2), Rat(0)}, Rat(1, 2), Rat(2), 2, {}};
    CHECK_NOTHROW(lat::validate(ok));

    lat::GapCvpInstance bad = ok;
    bad.gamma = Rat(9, 10); // gamma < 1
    CHECK_THROWS_AS(lat::validate(bad), DomainError);
    bad = ok;
    bad.d = Rat(0);
    CHECK_THROWS_AS(lat::validate(bad), DomainError);
    bad = ok;
    bad.p = 3; // odd norm exponent
    CHECK_THROWS_AS(lat::validate(bad), DomainError);
    bad = ok;
    bad.target.pop_back(); // dimension mismatch
    CHECK_THROWS_AS(lat::validate(bad), DomainError);

    lat::GapSvpInstance sok{b, Rat(1), Rat(2), 2};
    CHECK_NOTHROW(lat::validate(sok));
    sok.gamma = Rat(1, 2);
    CHECK_THROWS_AS(lat::validate(sok), DomainError);

    lat::ModSubsetSumInstance mok{{BigInt(3), BigInt(0)}, BigInt(3), BigInt(5)};
    CHECK_NOTHROW(lat::validate(mok));
    mok.residues[0] = 7; // out of canonical range
    CHECK_THROWS_AS(lat::validate(mok), DomainError);
    mok = {{BigInt(1)}, BigInt(0), BigInt(1)}; // modulus too small
    CHECK_THROWS_AS(lat::validate(mok), DomainError);
}

TEST_CASE("inner-product form matches direct evaluation") {
    ColsZ cols{{BigInt(2), BigInt(1)}, {BigInt(0), BigInt(3)}};
    VecZ t{BigInt(1), BigInt(-2)};
    lat::IpForm f = lat::ip_form(cols, t);
    CHECK(f.n == 2);
    CHECK(f.gram.size() == 3);
    CHECK(f.beta.size() == 2);
    // gram lower triangle: <b1,b1>=5, <b2,b1>=3, <b2,b2>=9
    CHECK(f.gram[0] == 5);
    CHECK(f.gram[1] == 3);
    CHECK(f.gram[2] == 9);
    CHECK(f.beta[0] == 0);  // <b1,t> = 2 - 2
    CHECK(f.beta[1] == -6);
    CHECK(f.beta_t == 5);

    num::Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        VecZ z{rng.uniform_bigint(BigInt(-4), BigInt(4)),
               rng.uniform_bigint(BigInt(-4), BigInt(4))};
        BigInt direct = lin::norm_pow(lin::sub(lin::mul(cols, z), t), 2);
        CHECK(lat::eval_dist_sq(f, z) == direct);
        BigInt q(97);
        CHECK(lat::eval_dist_sq_mod(f, z, q) == ((direct % q) + q) % q);
    }
}

TEST_CASE("entrywise multi-product") {
    VecZ v{BigInt(1), BigInt(2)};
    CHECK(lat::mvp({&v, &v, &v, &v}) == 17); // 1 + 16
    VecZ a{BigInt(2), BigInt(-1)}, b{BigInt(3), BigInt(5)};
    CHECK(lat::mvp({&a, &b}) == 1); // plain dot product
    VecZ w{BigInt(1), BigInt(0), BigInt(-1)};
    CHECK(lat::mvp({&w, &w}) == 2);
}

TEST_CASE("sorted multi-indices") {
    auto idx = lat::sorted_multi_indices(2, 2);
    REQUIRE(idx.size() == 3);
    CHECK(idx[0] == std::vector<uint32_t>{1, 1});
    CHECK(idx[1] == std::vector<uint32_t>{1, 2});
    CHECK(idx[2] == std::vector<uint32_t>{2, 2});
    CHECK(lat::multi_index_count(2, 2) == 3);
    CHECK(lat::multi_index_count(3, 4) == 15); // C(6,4)
    CHECK(lat::sorted_multi_indices(3, 4).size() == 15);
    // lexicographic order
    auto big = lat::sorted_multi_indices(4, 3);
    for (size_t i = 1; i < big.size(); ++i)
        CHECK(big[i - 1] < big[i]);
}

TEST_CASE("multilinear form agrees with direct p-norm powers") {
    num::Rng rng(9);
    for (unsigned p : {2u, 4u, 6u}) {
        ColsZ cols = rand_colsz(rng, 2, 3, 6);
        VecZ t{rng.uniform_bigint(BigInt(-6), BigInt(6)),
               rng.uniform_bigint(BigInt(-6), BigInt(6)),
               rng.uniform_bigint(BigInt(-6), BigInt(6))};
        lat::MvpForm f = lat::mvp_form(cols, t, p);
        CHECK(f.entries.size() == lat::multi_index_count(cols.size() + 1, p));
        for (int i = 0; i < 12; ++i) {
            VecZ z{rng.uniform_bigint(BigInt(-3), BigInt(3)),
                   rng.uniform_bigint(BigInt(-3), BigInt(3))};
            BigInt direct = lin::norm_pow(lin::sub(lin::mul(cols, z), t), p);
            CHECK(lat::eval_dist_pow(f, z) == direct);
            BigInt q(101);
            CHECK(lat::eval_dist_pow_mod(f, z, q) == ((direct % q) + q) % q);
        }
    }
}

TEST_CASE("quadratic and multilinear forms agree at p = 2") {
    num::Rng rng(14);
    ColsZ cols = rand_colsz(rng, 3, 3, 8);
    VecZ t{rng.uniform_bigint(BigInt(-8), BigInt(8)),
           rng.uniform_bigint(BigInt(-8), BigInt(8)),
           rng.uniform_bigint(BigInt(-8), BigInt(8))};
    lat::IpForm ip = lat::ip_form(cols, t);
    lat::MvpForm mv = lat::mvp_form(cols, t, 2);
    for (int i = 0; i < 15; ++i) {
        VecZ z{rng.uniform_bigint(BigInt(-3), BigInt(3)),
               rng.uniform_bigint(BigInt(-3), BigInt(3)),
               rng.uniform_bigint(BigInt(-3), BigInt(3))};
        CHECK(lat::eval_dist_sq(ip, z) == lat::eval_dist_pow(mv, z));
    }
}

TEST_CASE("compressed instance validation") {
    lat::MvpForm f = lat::mvp_form({{BigInt(1)}}, {BigInt(0)}, 2);
    lat::RqCompressed ok{f, BigInt(11), BigInt(4), BigInt(0)};
    CHECK_NOTHROW(lat::validate(ok));
    lat::RqCompressed bad = ok;
    bad.q = 1;
    CHECK_THROWS_AS(lat::validate(bad), DomainError);
    bad = ok;
    bad.r = -1;
    CHECK_THROWS_AS(lat::validate(bad), DomainError);
    bad = ok;
    bad.dpp = -2; // only -1 is the reserved empty predicate
    CHECK_THROWS_AS(lat::validate(bad), DomainError);
    bad = ok;
    bad.dpp = -1;
    CHECK_NOTHROW(lat::validate(bad));
}

TEST_CASE("denominator clearing") {
    lat::Basis b =
        lat::Basis::make({{Rat(1, 2), Rat(0)}, {Rat(1, 3), Rat(1)}});
    VecQ t{Rat(1, 4), Rat(2)};
    lat::ScaledCvp s = lat::scale_to_integers(b, t);
    CHECK(s.scaler == 12);
    CHECK(s.cols == ColsZ{{BigInt(6), BigInt(0)}, {BigInt(4), BigInt(12)}});
    CHECK(s.target == VecZ{BigInt(3), BigInt(24)});

    lat::ScaledBasis sb = lat::scale_to_integers(b);
    CHECK(sb.scaler == 6);
    CHECK(sb.cols == ColsZ{{BigInt(3), BigInt(0)}, {BigInt(2), BigInt(6)}});
}

TEST_CASE("alpha parameter") {
    for (auto [n, m, eta] : {std::tuple<size_t, size_t, unsigned long>{3, 4, 16},
                             {2, 2, 1},
                             {8, 8, 16}}) {
        CHECK(lat::alpha_param(n, m, eta) ==
              num::ceil_log2_squared(BigInt(static_cast<unsigned long>(n + m + eta))));
    }
}
