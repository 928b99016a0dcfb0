#pragma once

#include <functional>

#include "latcomp/lattice.hpp"
#include "latcomp/reduction.hpp"

namespace latcomp::oracle {

using lat::Basis;
using lin::ColsQ;
using lin::VecQ;
using lin::VecZ;
using num::BigInt;
using num::Rat;

// Hard ceiling on enumerated points; GuardError beyond it.
inline constexpr uint64_t kEnumGuard = 10'000'000;

struct BruteResult {
    VecZ z; // coefficients w.r.t. the given basis columns
    Rat value; // ||B z - t||_p^p
};

// Exhaustive search over z in [-box, box]^n.  Returns the lexicographically
// least argmin.
BruteResult brute_cvp(const Basis& basis, const VecQ& target, const BigInt& box,
                      unsigned p = 2, uint64_t guard = kEnumGuard);

// Same over nonzero z.
BruteResult brute_svp(const Basis& basis, const BigInt& box, unsigned p = 2,
                      uint64_t guard = kEnumGuard);

// Every argmin in the box, in lexicographic order; GuardError past cap.
std::vector<VecZ> brute_cvp_all(const Basis& basis, const VecQ& target,
                                const BigInt& box, unsigned p = 2,
                                size_t cap = 4096, uint64_t guard = kEnumGuard);

// Per-coordinate bounds, from the GSO of an LLL-reduced basis, on the
// coefficients of every ell_p minimiser.  CVP bounds are for the shifted
// problem (cols, shifted) where `shifted` comes out of babai_shift, so the
// minimisers of the original target are w + box points.
std::vector<BigInt> certified_cvp_box(const ColsQ& reduced, const VecQ& shifted,
                                      unsigned p);
std::vector<BigInt> certified_svp_box(const ColsQ& reduced, unsigned p);

// Bounds containing every coefficient vector with ||C z||_2^2 <= ref_sq.
std::vector<BigInt> coeff_box_for_length(const ColsQ& reduced, const Rat& ref_sq);

// Bounds containing every z with ||C z - t||_2^2 <= ref_sq (t given
// directly, not pre-shifted; works for any full-rank C).
std::vector<BigInt> coeff_box_for_target(const ColsQ& cols, const VecQ& t,
                                         const Rat& ref_sq);

// Visits every z in the product box [-zb_i, zb_i] in lexicographic order
// until the visitor returns false; GuardError when the box exceeds `guard`
// points.
void for_each_in_box(const std::vector<BigInt>& zb, uint64_t guard,
                     const std::function<bool(const VecZ&)>& visit);

// Optimal CVP/SVP by enumeration of a certified box.  Coefficients refer to
// the original basis columns; deterministic, but not the lexicographic-least
// argmin (the scan runs in the reduced coordinate system).
BruteResult exact_cvp(const Basis& basis, const VecQ& target, unsigned p = 2,
                      uint64_t guard = kEnumGuard);
BruteResult exact_svp(const Basis& basis, unsigned p = 2,
                      uint64_t guard = kEnumGuard);

// Default unit-scale SVP search box, ceil(2^(3(n-1)/2)): with an
// LLL-reduced basis this covers every shortest-vector coefficient.
BigInt default_svp_box(size_t n);

// Meet-in-the-middle subset sum, n <= 24.  Witness (when yes) is the list of
// 1-based indices of the smallest qualifying bitmask, bit k-1 <-> index k;
// value is the achieved sum (resp. canonical residue).
lat::Verdict brute_subsetsum(const lat::SubsetSumInstance& inst);
lat::Verdict decide_mod_subsetsum(const lat::ModSubsetSumInstance& inst);

// Decision for a compressed (r, q) form: scan [-box, box]^n (box = inst.r
// unless overridden) for eval <= dpp mod q.  YES verdicts carry the
// lexicographically first qualifying point and stop there; NO verdicts carry
// the minimum achieved residue.
lat::Verdict decide_compressed(const lat::RqCompressed& inst,
                               const std::optional<BigInt>& box_override = std::nullopt,
                               uint64_t guard = kEnumGuard);

} // namespace latcomp::oracle
