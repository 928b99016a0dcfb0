#include <doctest.h>

#include "latcomp/compress_cvp.hpp"
#include "latcomp/io.hpp"
#include "latcomp/oracle.hpp"
#include "latcomp/verify.hpp"

using namespace latcomp;
using lin::ColsZ;
using lin::VecQ;
using lin::VecZ;
using num::BigInt;
using num::Rat;

namespace {

// Coefficients of B z in the compressed coordinate system.
VecZ map_coeffs(const compress::CvpCompression& comp, const lat::Basis& basis,
                const VecZ& z) {
    auto y = lin::solve(comp.coeff.cols, lin::mul(basis.cols, z));
    REQUIRE(y.has_value());
    return lin::sub(lin::to_int(*y), comp.coeff.w);
}

} // namespace

TEST_CASE("bit truncation of a one-dimensional instance") {
    ColsZ cols{{num::pow2z(40)}};
    VecZ target{num::pow2z(40) + num::pow2z(39)};
    compress::Truncation tr =
        compress::truncate_bits(cols, target, Rat(num::pow2z(36)), 1, 3);
    CHECK(tr.n_prime == 36);
    CHECK(tr.shift == 32);
    CHECK(tr.cols == ColsZ{{BigInt(256)}});
    CHECK(tr.target == VecZ{BigInt(384)});
    CHECK(tr.d == 20);
    // the output threshold respects the uniform cap 2^(4 n^c + 2)
    CHECK(tr.d < num::pow2q(4 + 2));
}

TEST_CASE("truncation is the identity below the threshold") {
    ColsZ cols{{BigInt(7), BigInt(-3)}, {BigInt(2), BigInt(5)}};
    VecZ target{BigInt(1), BigInt(4)};
    compress::Truncation tr = compress::truncate_bits(cols, target, Rat(8), 1, 1);
    CHECK(tr.shift == 0);
    CHECK(tr.cols == cols);
    CHECK(tr.target == target);
    CHECK(tr.d == 8);
    CHECK_THROWS_AS(compress::truncate_bits(cols, target, Rat(0), 1, 1),
                    DomainError);
}

TEST_CASE("truncation rounds entries toward minus infinity") {
    ColsZ cols{{BigInt(-num::pow2z(40)) - 1}};
    VecZ target{BigInt(0)};
    compress::Truncation tr =
        compress::truncate_bits(cols, target, Rat(num::pow2z(36)), 1, 3);
    // floor division: (-2^40 - 1) >> 32 = -2^8 - 1
    CHECK(tr.cols[0][0] == -257);
}

TEST_CASE("modular projection takes canonical residues") {
    ColsZ cols{{BigInt(-1), BigInt(10)}, {BigInt(7), BigInt(-8)}};
    VecZ target{BigInt(-9), BigInt(3)};
    compress::Projection pr = compress::modular_project(cols, target, BigInt(7));
    CHECK(pr.cols == ColsZ{{BigInt(6), BigInt(3)}, {BigInt(0), BigInt(6)}});
    CHECK(pr.target == VecZ{BigInt(5), BigInt(3)});
    CHECK_THROWS_AS(compress::modular_project(cols, target, BigInt(1)),
                    DomainError);
}

TEST_CASE("projection preserves norm powers modulo q") {
    num::Rng rng(204);
    const BigInt q(97);
    for (int trial = 0; trial < 20; ++trial) {
        ColsZ cols(2, VecZ(3));
        VecZ target(3);
        for (auto& col : cols)
            for (auto& v : col)
                v = rng.uniform_bigint(BigInt(-50), BigInt(50));
        for (auto& v : target)
            v = rng.uniform_bigint(BigInt(-50), BigInt(50));
        compress::Projection pr = compress::modular_project(cols, target, q);
        const unsigned p = trial % 2 == 0 ? 2 : 4;
        VecZ z{rng.uniform_bigint(BigInt(-4), BigInt(4)),
               rng.uniform_bigint(BigInt(-4), BigInt(4))};
        BigInt before = lin::norm_pow(lin::sub(lin::mul(cols, z), target), p);
        BigInt after =
            lin::norm_pow(lin::sub(lin::mul(pr.cols, z), pr.target), p);
        BigInt diff = after - before;
        mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), q.get_mpz_t());
        CHECK(diff == 0);
    }
}

TEST_CASE("euclidean pipeline parameters at full strength") {
    num::Rng rng(201);
    lat::Basis basis =
        lat::Basis::make(verify::random_basis_cols(rng, 2, 3, 6));
    lat::GapCvpInstance inst = verify::plant_cvp_yes(rng, basis, 2);

    lat::PipelineParams params;
    params.seed = 12;
    compress::CvpCompression comp = compress::compress_cvp(inst, params);

    CHECK(comp.c == 3); // max(c1 + 1, 3) with c1 = 1
    CHECK(comp.out.r == num::pow2z(4)); // 2^(n^2)
    CHECK(comp.coeff.box <= comp.out.r);
    CHECK(comp.eta == io::payload_bits(inst));
    CHECK(comp.alpha == lat::alpha_param(2, 3, comp.eta));
    // exponents 10 n^c + alpha .. 20 n^c + alpha with n^c = 8
    CHECK(comp.range.lo_exp == 80 + comp.alpha);
    CHECK(comp.range.hi_exp == 160 + comp.alpha);
    CHECK(comp.out.q >= num::pow2z(comp.range.lo_exp));
    CHECK(comp.out.q <= num::pow2z(comp.range.hi_exp));
    CHECK(num::is_probable_prime(comp.out.q));
    CHECK(comp.out.dpp >= 0);
    CHECK(comp.out.dpp < comp.out.q);
    CHECK(comp.out.form.p == 2);

    // the stored matrix is projected to canonical residues and its form is
    // congruent mod q to the form of the small pre-projection matrix
    for (const auto& col : comp.proj_cols)
        for (const BigInt& v : col) {
            CHECK(v >= 0);
            CHECK(v < comp.out.q);
        }
    lat::MvpForm small = lat::mvp_form(comp.trunc_cols, comp.trunc_target, 2);
    REQUIRE(small.entries.size() == comp.out.form.entries.size());
    for (size_t i = 0; i < small.entries.size(); ++i) {
        BigInt diff = comp.out.form.entries[i] - small.entries[i];
        mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), comp.out.q.get_mpz_t());
        CHECK(diff == 0);
    }

    // a true closest vector maps onto a compressed witness
    oracle::BruteResult e = oracle::exact_cvp(inst.basis, inst.target, 2);
    CHECK(Rat(e.value) <= inst.d * inst.d);
    VecZ zc = map_coeffs(comp, inst.basis, e.z);
    for (const BigInt& v : zc)
        CHECK(abs(v) < comp.coeff.box);
    CHECK(lat::eval_dist_pow_mod(comp.out.form, zc, comp.out.q) <= comp.out.dpp);

    // the compressed decision agrees
    CHECK(oracle::decide_compressed(comp.out).yes);
}

TEST_CASE("quartic pipeline in scaled mode") {
    num::Rng rng(202);
    lat::Basis basis =
        lat::Basis::make(verify::random_basis_cols(rng, 3, 3, 4));
    lat::GapCvpInstance inst = verify::plant_cvp_yes(rng, basis, 4);

    lat::PipelineParams params;
    params.seed = 13;
    params.scaled_s = 1;
    compress::CvpCompression comp = compress::compress_cvp(inst, params);

    CHECK(comp.c == 2); // max(c1 + 1, 2)
    CHECK(comp.out.r == num::pow2z(9)); // 2^(n^c)
    CHECK(comp.range.lo_exp == 30); // 10 n s
    CHECK(comp.range.hi_exp == 60);
    CHECK(comp.out.form.p == 4);
    CHECK(comp.out.form.entries.size() == lat::multi_index_count(4, 4));

    oracle::BruteResult e = oracle::exact_cvp(inst.basis, inst.target, 4);
    CHECK(Rat(e.value) <= inst.d * inst.d * inst.d * inst.d);
    VecZ zc = map_coeffs(comp, inst.basis, e.z);
    for (const BigInt& v : zc)
        CHECK(abs(v) < comp.coeff.box);
    CHECK(lat::eval_dist_pow_mod(comp.out.form, zc, comp.out.q) <= comp.out.dpp);
}

TEST_CASE("shape guards reject out-of-contract inputs") {
    lat::Basis id = lat::Basis::make({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    lat::PipelineParams params;
    params.seed = 1;

    // gamma below 1 + 2^(-n^c1)
    lat::GapCvpInstance narrow{id, {Rat(1, 2), Rat(0)}, Rat(1, 2), Rat(9, 8), 2, {}};
    CHECK_THROWS_AS(compress::compress_cvp(narrow, params), DomainError);

    // an enormous threshold overwhelms a scaled-mode modulus
    lat::GapCvpInstance huge{id, {Rat(1, 2), Rat(0)}, Rat(num::pow2z(40)),
                             Rat(2), 2, {}};
    lat::PipelineParams scaled = params;
    scaled.scaled_s = 1;
    CHECK_THROWS_AS(compress::compress_cvp(huge, scaled), GuardError);

    // a loose distance promise blows the coefficient box past r
    lat::GapCvpInstance loose{id, {Rat(1, 2), Rat(0)}, Rat(1, 2), Rat(2), 4,
                              Rat(10)};
    CHECK_THROWS_AS(compress::compress_cvp(loose, params), GuardError);
}

TEST_CASE("pinned alpha and seed reproduce the modulus across instances") {
    num::Rng rng(203);
    lat::Basis a = lat::Basis::make(verify::random_basis_cols(rng, 2, 2, 5));
    lat::Basis b = lat::Basis::make(verify::random_basis_cols(rng, 2, 3, 5));
    lat::GapCvpInstance ia = verify::plant_cvp_yes(rng, a, 2);
    lat::GapCvpInstance ib = verify::plant_cvp_yes(rng, b, 2);

    lat::PipelineParams params;
    params.seed = 77;
    params.alpha_override = 25;
    compress::CvpCompression ca = compress::compress_cvp(ia, params);
    compress::CvpCompression cb = compress::compress_cvp(ib, params);
    CHECK(ca.out.q == cb.out.q);
    CHECK(ca.range.lo_exp == cb.range.lo_exp);
    // entry counts depend only on n and p
    CHECK(ca.out.form.entries.size() == cb.out.form.entries.size());
}
