#pragma once

#include "latcomp/lattice.hpp"

namespace latcomp::compress {

using num::BigInt;

// Random-prime modular reduction of a subset-sum instance.  YES instances
// stay YES for every modulus; NO instances stay NO with high probability
// over the prime draw.
struct SubsetSumCompression {
    lat::ModSubsetSumInstance out;
    unsigned long eta = 0; // max bit magnitude of the inputs, >= 1
    lat::PrimeRange range;
};

// eta = ceil(log2 max(|a_i|, |t|)) clamped to >= 1; the prime is drawn from
// [2^lo, 2^hi] with lo = 10n + 2 ceil(log2 max(eta, 2)) + 10 and
// hi = lo + 10n.  Scaled mode (params.scaled_s = s) uses [2^s, 2^(2s)].
SubsetSumCompression compress_subsetsum(const lat::SubsetSumInstance& inst,
                                        const lat::PipelineParams& params);

} // namespace latcomp::compress
