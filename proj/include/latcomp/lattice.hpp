#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latcomp/linalg.hpp"

namespace latcomp::lat {

using lin::ColsQ;
using lin::ColsZ;
using lin::VecQ;
using lin::VecZ;
using num::BigInt;
using num::Rat;

// A lattice basis: n linearly independent columns in Q^m, m >= n >= 1.
struct Basis {
    ColsQ cols;

    size_t rank_n() const { return cols.size(); }
    size_t dim_m() const { return cols.empty() ? 0 : cols[0].size(); }

    // Validates shape and exact linear independence.
    static Basis make(ColsQ cols);
};

// Gap decision instances.  YES when the distance (length) in ell_p is <= d,
// NO when it exceeds gamma * d; in between the decision is unconstrained.
struct GapCvpInstance {
    Basis basis;
    VecQ target;
    Rat d;
    Rat gamma;
    unsigned p = 2;
    // Optional distance promise dist_p <= tau * lambda_1^(p).
    std::optional<Rat> promise_tau;
};

struct GapSvpInstance {
    Basis basis;
    Rat d;
    Rat gamma;
    unsigned p = 2;
};

struct SubsetSumInstance {
    std::vector<BigInt> values;
    BigInt target;
};

struct ModSubsetSumInstance {
    std::vector<BigInt> residues; // canonical, in [0, modulus)
    BigInt target;
    BigInt modulus;
};

void validate(const GapCvpInstance& inst);
void validate(const GapSvpInstance& inst);
void validate(const ModSubsetSumInstance& inst);

// ---- quadratic / multilinear forms ----

// Inner-product form of an integer CVP instance: gram_{i,j} = <b_i, b_j>
// (lower triangle, row-major), beta_i = <b_i, t>, beta_t = <t, t>.
struct IpForm {
    size_t n = 0;
    std::vector<BigInt> gram; // n(n+1)/2 entries, index i(i+1)/2 + j for j <= i
    std::vector<BigInt> beta;
    BigInt beta_t;
};

IpForm ip_form(const ColsZ& cols, const VecZ& target);
// ||B z - t||_2^2 evaluated through the form.
BigInt eval_dist_sq(const IpForm& f, const VecZ& z);
BigInt eval_dist_sq_mod(const IpForm& f, const VecZ& z, const BigInt& q);

// Sum over coordinates of the entrywise product of p vectors.
BigInt mvp(const std::vector<const VecZ*>& vs);

// Multilinear form for even p: one entry per sorted multi-index over
// [1 .. n+1], where index n+1 denotes the target column (its evaluation
// coefficient is fixed at -1).  Entries are in lexicographic order.
struct MvpForm {
    size_t n = 0;
    unsigned p = 2;
    std::vector<BigInt> entries;
};

// All non-decreasing p-tuples over [1, alphabet] in lexicographic order.
std::vector<std::vector<uint32_t>> sorted_multi_indices(size_t alphabet, unsigned p);
size_t multi_index_count(size_t alphabet, unsigned p);

MvpForm mvp_form(const ColsZ& cols, const VecZ& target, unsigned p);
// ||B z - t||_p^p evaluated through the form (multinomial expansion).
BigInt eval_dist_pow(const MvpForm& f, const VecZ& z);
BigInt eval_dist_pow_mod(const MvpForm& f, const VecZ& z, const BigInt& q);

// Compressed (r, q) instance: YES iff some z with |z_i| <= r satisfies
// eval_dist_pow_mod(form, z, q) <= dpp.  dpp = -1 encodes the empty
// predicate (always NO); pipeline outputs always have dpp >= 0.
struct RqCompressed {
    MvpForm form; // entries reduced mod q
    BigInt q;
    BigInt r;
    BigInt dpp;
};

void validate(const RqCompressed& inst);

// ---- scaling ----

// Clear denominators with the minimal common scaler (lcm of denominators).
// Any distance threshold must be scaled by the same factor by the caller.
struct ScaledCvp {
    ColsZ cols;
    VecZ target;
    BigInt scaler;
};

ScaledCvp scale_to_integers(const Basis& basis, const VecQ& target);

struct ScaledBasis {
    ColsZ cols;
    BigInt scaler;
};

ScaledBasis scale_to_integers(const Basis& basis);

// ---- pipeline parameters ----

struct PrimeRange {
    unsigned long lo_exp = 0; // primes drawn from [2^lo_exp, 2^hi_exp]
    unsigned long hi_exp = 0;
};

struct PipelineParams {
    // gamma = 1 + 2^(-n^c1)
    unsigned c1 = 1;
    // Test-scale prime ranges: CVP/SVP exponents become
    // (10*n*s, 20*n*s), subset-sum (s, 2*s).  Full parameters when unset.
    std::optional<unsigned> scaled_s;
    uint64_t seed = 0;
    int mr_rounds = 64;
    uint64_t max_prime_attempts = 0;
    // Testing hook: pins the alpha summand of the prime-range exponents.
    std::optional<unsigned long> alpha_override;
};

// alpha = ceil(log2^2(n + m + eta)).
unsigned long alpha_param(size_t n, size_t m, unsigned long eta);

// ---- oracle verdicts ----

struct Verdict {
    bool yes = false;
    // CVP/SVP: coefficient vector. Subset sum: 1-based element indices.
    std::optional<VecZ> witness;
    // dist^p, length^p, or the achieved subset sum.
    Rat value;
};

} // namespace latcomp::lat
