#pragma once

#include "latcomp/reduction.hpp"

namespace latcomp::compress {

using lin::ColsZ;
using lin::VecQ;
using lin::VecZ;
using num::BigInt;
using num::Rat;

// Bit truncation of an integer instance.  With nf = floor(log2 d) and
// thr = 4 n^c: when nf > thr every matrix entry is floor-divided by
// 2^(nf - thr) and the threshold becomes (d + 2^(nf - 2 n^c)) / 2^s;
// otherwise the instance passes through unchanged.  The output threshold is
// uniformly below 2^(4 n^c + 2).
struct Truncation {
    ColsZ cols;
    VecZ target;
    Rat d;
    long n_prime = 0;       // floor(log2 d) of the input
    unsigned long shift = 0; // s; 0 = identity
};

Truncation truncate_bits(ColsZ cols, VecZ target, const Rat& d, size_t n,
                         unsigned long c);

// Coordinate-wise canonical residues: h_i = c_i mod q and t'' = t mod q, all
// coordinates in [0, q).  For every z the p-norm power of H z - t'' is
// congruent mod q to that of C z - t, so the canonically reduced form entries
// -- and with them the emitted instance -- come out identical whether the
// form is read off the projected or the unprojected matrix.  The projection
// is the pipeline's bounded hand-off point: H and t'' occupy (n+1)*m residues
// of at most log2(q) bits each, however large the input coordinates were.
struct Projection {
    ColsZ cols;
    VecZ target;
};

Projection modular_project(ColsZ cols, VecZ target, const BigInt& q);

// Full compression record.  `out` is the portable result; the rest is the
// exact mapping data connecting it back to the input: a coefficient vector z
// of `out` corresponds to basis coefficients transform * (z + w).
struct CvpCompression {
    lat::RqCompressed out;
    reduce::CoeffBound coeff; // LLL/Babai stage (rational, pre-truncation)
    ColsZ trunc_cols;         // small integer matrix congruent to out.form
    VecZ trunc_target;
    ColsZ proj_cols;          // canonical residues actually behind out.form
    VecZ proj_target;
    Rat d_trunc;    // threshold in the truncated scale
    BigInt scaler;  // denominator-clearing factor
    unsigned c = 0; // derived exponent parameter
    unsigned long eta = 0;   // input payload bits
    unsigned long alpha = 0; // ceil(log2^2(n + m + eta))
    lat::PrimeRange range;
};

// gamma must satisfy gamma >= 1 + 2^(-n^c1).  p = 2 uses
// c = max(c1 + 1, 3), box r = 2^(n^2) and primes from
// [2^(10 n^c + alpha), 2^(20 n^c + alpha)]; even p >= 4 uses
// c = max(c1 + 1, 2), r = 2^(n^c), exponents 10 n^(c+1) + alpha and
// 20 n^(c+1) + alpha, and the distance promise tau (from the instance, else
// 1/(gamma-1)).  Scaled mode s replaces the exponents by (10 n s, 20 n s).
// The decision threshold is dpp = floor(d_trunc^p).
CvpCompression compress_cvp(const lat::GapCvpInstance& inst,
                            const lat::PipelineParams& params);

} // namespace latcomp::compress
