#include <doctest.h>

#include "latcomp/compress_subsetsum.hpp"
#include "latcomp/oracle.hpp"
#include "latcomp/verify.hpp"

using namespace latcomp;
using num::BigInt;
using num::Rat;

TEST_CASE("compression maps sums onto residues exactly") {
    lat::SubsetSumInstance inst{{BigInt(300), BigInt(500), BigInt(700)},
                                BigInt(800)};
    lat::PipelineParams params;
    params.seed = 7;
    compress::SubsetSumCompression c = compress::compress_subsetsum(inst, params);

    CHECK(c.eta == 10); // ceil(log2 800) = 10
    CHECK(num::is_probable_prime(c.out.modulus));
    CHECK(c.out.modulus >= num::pow2z(c.range.lo_exp));
    CHECK(c.out.modulus <= num::pow2z(c.range.hi_exp));
    // exponents: lo = 10 n + 2 ceil(log2 eta) + 10, hi = lo + 10 n
    CHECK(c.range.lo_exp == 10 * 3 + 2 * 4 + 10);
    CHECK(c.range.hi_exp == c.range.lo_exp + 10 * 3);

    REQUIRE(c.out.residues.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(c.out.residues[i] >= 0);
        CHECK(c.out.residues[i] < c.out.modulus);
        CHECK((inst.values[i] - c.out.residues[i]) % c.out.modulus == 0);
    }
    CHECK((inst.target - c.out.target) % c.out.modulus == 0);
}

TEST_CASE("solutions survive compression verbatim") {
    num::Rng rng(101);
    for (int t = 0; t < 12; ++t) {
        lat::SubsetSumInstance inst =
            verify::plant_subsetsum(rng, 4 + t % 5, 16, true);
        lat::Verdict before = oracle::brute_subsetsum(inst);
        REQUIRE(before.yes);

        lat::PipelineParams params;
        params.seed = rng.next_u64();
        auto c = compress::compress_subsetsum(inst, params);
        lat::Verdict after = oracle::decide_mod_subsetsum(c.out);
        CHECK(after.yes);
        // the original witness still works modulo q
        BigInt s = 0;
        for (const BigInt& i : *before.witness)
            s += inst.values[mpz_get_ui(i.get_mpz_t()) - 1];
        CHECK((s - inst.target) % c.out.modulus == 0);
    }
}

TEST_CASE("non-solutions survive full-parameter compression") {
    // at full parameters q is astronomically larger than any achievable sum,
    // so the reduction is injective on the instance and NO stays NO
    num::Rng rng(102);
    for (int t = 0; t < 10; ++t) {
        lat::SubsetSumInstance inst = verify::plant_subsetsum(rng, 6, 16, false);
        REQUIRE_FALSE(oracle::brute_subsetsum(inst).yes);
        lat::PipelineParams params;
        params.seed = rng.next_u64();
        auto c = compress::compress_subsetsum(inst, params);
        CHECK_FALSE(oracle::decide_mod_subsetsum(c.out).yes);
    }
}

TEST_CASE("scaled primes shrink the output") {
    lat::SubsetSumInstance inst{{BigInt(30000), BigInt(50001), BigInt(64000)},
                                BigInt(114001)};
    lat::PipelineParams params;
    params.seed = 5;
    params.scaled_s = 8;
    auto c = compress::compress_subsetsum(inst, params);
    CHECK(c.range.lo_exp == 8);
    CHECK(c.range.hi_exp == 16);
    CHECK(c.out.modulus <= num::pow2z(16));
    // YES is still preserved: 30000 + 64000 != 114001, but 50001 + 64000 is
    lat::Verdict v = oracle::decide_mod_subsetsum(c.out);
    CHECK(v.yes);
}

TEST_CASE("the prime draw is deterministic in the seed") {
    lat::SubsetSumInstance inst{{BigInt(11), BigInt(22), BigInt(37)}, BigInt(48)};
    lat::PipelineParams a, b;
    a.seed = b.seed = 99;
    CHECK(compress::compress_subsetsum(inst, a).out.modulus ==
          compress::compress_subsetsum(inst, b).out.modulus);
    b.seed = 100;
    CHECK(compress::compress_subsetsum(inst, a).out.modulus !=
          compress::compress_subsetsum(inst, b).out.modulus);
}

TEST_CASE("degenerate values still compress") {
    // zeros and a zero target: eta clamps to >= 1 and residues stay canonical
    lat::SubsetSumInstance inst{{BigInt(0), BigInt(1)}, BigInt(0)};
    lat::PipelineParams params;
    params.seed = 3;
    auto c = compress::compress_subsetsum(inst, params);
    CHECK(c.eta >= 1);
    CHECK(c.out.residues[0] == 0);
    lat::Verdict v = oracle::decide_mod_subsetsum(c.out);
    CHECK(v.yes); // the empty subset (or {1}) sums to 0
}
