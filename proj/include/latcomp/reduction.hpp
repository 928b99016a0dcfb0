#pragma once

#include "latcomp/lattice.hpp"

namespace latcomp::reduce {

using lat::Basis;
using lin::ColsQ;
using lin::ColsZ;
using lin::VecQ;
using lin::VecZ;
using num::BigInt;
using num::Rat;

// Gram-Schmidt data: bstar[i] = b*_i, mu[i][j] = <b_i, b*_j> / ||b*_j||^2
// for j < i, bstar_sq[i] = ||b*_i||^2.
struct Gso {
    ColsQ bstar;
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> bstar_sq;
};

// RankError when some b*_i vanishes (dependent columns).
Gso gso(const ColsQ& cols);

// Classical exact-rational reduction with delta = 3/4.  Output satisfies
// |mu_{i,j}| <= 1/2 and ||b*_i||^2 >= ||b*_{i-1}||^2 / 2.
ColsQ lll_reduce(ColsQ cols);

// Also returns the unimodular transform U with output = input * U.
struct LllResult {
    ColsQ cols;
    ColsZ transform; // n x n, column bag
};
LllResult lll_reduce_ex(ColsQ cols);

struct LllConditions {
    bool size_reduced = false;     // |mu_{i,j}| <= 1/2 for all i > j
    bool successive_norms = false; // ||b*_i||^2 >= ||b*_{i-1}||^2 / 2
};
LllConditions check_lll_conditions(const ColsQ& cols);

// Nearest-plane shift: w_n = round(x_n), then backwards
// w_i = round(x_i - sum_{k>i} w_k mu_{k,i}), shifted = t - sum w_i c_i.
// Every in-span residual x*_i lies in (-1/2, 1/2].  Targets outside the
// span keep their orthogonal component in `shifted` untouched.
struct BabaiResult {
    VecZ w;
    VecQ shifted;
    std::vector<Rat> residuals; // x*_1 .. x*_n
};
BabaiResult babai_shift(const ColsQ& cols, const VecQ& target);

// D^2 = ||shifted||_2^2; satisfies dist^2 <= D^2 <= 2^n * dist^2 when the
// basis is LLL-reduced.
Rat babai_distance_sq(const BabaiResult& r);

// ||c_1||_2^2 of the LLL reduction of the basis; satisfies
// lambda_1^2 <= D^2 <= 2^n * lambda_1^2.
Rat svp_length_sq(const Basis& basis);

// LLL + Babai packaged for the compression pipelines.  `box` is the strict
// coefficient bound: every exact-closest coefficient vector z of
// (cols, shifted) has ||z||_inf < box.
struct CoeffBound {
    ColsQ cols;      // LLL-reduced basis
    ColsZ transform; // original * transform = cols
    VecQ shifted;
    VecZ w; // shift coefficients: shifted = target - cols * w
    BigInt box;
};

// ell_2: box = 2^(n^2).
CoeffBound bound_coefficients_l2(const Basis& basis, const VecQ& target);
// ell_p with distance promise dist_p <= tau * lambda_1^(p):
// box = ceil(tau * m * 2^(3n/2)).
CoeffBound bound_coefficients_lp(const Basis& basis, const VecQ& target,
                                 unsigned p, const Rat& tau);

// Canonical column-style Hermite normal form; two integer bases generate the
// same lattice iff their forms coincide.  Requires full column rank.
ColsZ hnf(const ColsZ& cols);

} // namespace latcomp::reduce
