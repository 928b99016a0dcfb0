#pragma once

#include "latcomp/oracle.hpp"
#include "latcomp/reduction.hpp"

namespace latcomp::amplify {

using lin::VecQ;
using lin::VecZ;
using num::BigInt;
using num::Rat;

// Geometric-padding constructions: append n fresh coordinates, giving column
// i the single extra entry eps_i.  The eps scales decay so fast that every
// length moves by a vanishing amount while distinct coefficient vectors pick
// up distinct pad contributions — the knob that widens uniqueness gaps.
// Input bases must already be LLL-reduced (checked; DomainError otherwise).

struct PaddedBasis {
    lat::Basis basis;     // (m + n) x n
    std::vector<Rat> eps; // appended scales, eps[i-1] on column i
    Rat dref;             // dyadic reference length D the scales multiply
};

// eps_i = 2^(2(i-1)n - 2n^2) * D with D >= ||c_1||_2 dyadic.  Afterwards
// lambda_1(L)^2 < lambda_1(L')^2 <= 2 lambda_1(L)^2, and lifting a shortest
// vector of L adds at most 2^-n * D^2 in squared length.
PaddedBasis pad_svp_basis(const lat::Basis& basis);

struct PaddedCvp {
    lat::Basis basis;
    VecQ target; // [t; 0^n]
    std::vector<Rat> eps;
    Rat dref;
};

// eps_i = 2^(11(i-1)n^2 - 11n^3) * D with D >= the nearest-plane distance
// for the target (DomainError when the target lies in the lattice).
PaddedCvp pad_cvp_instance(const lat::Basis& basis, const VecQ& target);

// Measured ell_2 successive minima; the uniqueness gap is the ratio
// lambda2_sq / lambda1_sq.  Witnesses are coefficients w.r.t. the input
// basis; v2 is the least vector linearly independent of v1.
struct GapMeasure {
    Rat lambda1_sq;
    Rat lambda2_sq;
    VecZ v1;
    VecZ v2;
};

GapMeasure measure_gap(const lat::Basis& basis, uint64_t guard = oracle::kEnumGuard);

} // namespace latcomp::amplify
