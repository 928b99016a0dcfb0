#include "latcomp/compress_subsetsum.hpp"

#include <algorithm>

namespace latcomp::compress {

namespace {

unsigned long ceil_log2_abs(const BigInt& v) {
    BigInt a = abs(v);
    if (a <= 1)
        return 0;
    const unsigned long k = mpz_sizeinbase(a.get_mpz_t(), 2);
    return mpz_popcount(a.get_mpz_t()) == 1 ? k - 1 : k;
}

} // namespace

SubsetSumCompression compress_subsetsum(const lat::SubsetSumInstance& inst,
                                        const lat::PipelineParams& params) {
    const size_t n = inst.values.size();
    if (n == 0)
        throw DomainError("subset-sum compression: empty instance");

    SubsetSumCompression res;
    res.eta = 1;
    for (const BigInt& v : inst.values)
        res.eta = std::max(res.eta, ceil_log2_abs(v));
    res.eta = std::max(res.eta, ceil_log2_abs(inst.target));

    if (params.scaled_s) {
        res.range.lo_exp = *params.scaled_s;
        res.range.hi_exp = 2 * *params.scaled_s;
    } else {
        const unsigned long t = 2 * ceil_log2_abs(BigInt(std::max(res.eta, 2ul))) + 10;
        res.range.lo_exp = 10 * n + t;
        res.range.hi_exp = 20 * n + t;
    }

    num::Rng rng = num::Rng(params.seed).derive("subsetsum-q");
    num::PrimeSampleOptions opt;
    opt.mr_rounds = params.mr_rounds;
    opt.max_attempts = params.max_prime_attempts;
    res.out.modulus = num::sample_prime(num::pow2z(res.range.lo_exp),
                                        num::pow2z(res.range.hi_exp), rng, opt);

    res.out.residues.resize(n);
    for (size_t i = 0; i < n; ++i)
        mpz_fdiv_r(res.out.residues[i].get_mpz_t(), inst.values[i].get_mpz_t(),
                   res.out.modulus.get_mpz_t());
    mpz_fdiv_r(res.out.target.get_mpz_t(), inst.target.get_mpz_t(),
               res.out.modulus.get_mpz_t());
    lat::validate(res.out);
    return res;
}

} // namespace latcomp::compress
