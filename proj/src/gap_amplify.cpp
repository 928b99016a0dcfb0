#include "latcomp/gap_amplify.hpp"

namespace latcomp::amplify {

namespace {

void require_reduced(const lat::Basis& basis, const char* what) {
    reduce::LllConditions c = reduce::check_lll_conditions(basis.cols);
    if (!c.size_reduced || !c.successive_norms)
        throw DomainError(std::string(what) + ": basis must be LLL-reduced");
}

long checked_exp(long v) {
    if (v > -1 || v < -4'000'000)
        throw GuardError("pad exponent out of range");
    return v;
}

// Columns extended by n fresh coordinates, eps_i on column i.
lat::Basis pad_columns(const lat::Basis& basis, const std::vector<Rat>& eps) {
    const size_t n = basis.rank_n();
    const size_t m = basis.dim_m();
    lin::ColsQ cols(n);
    for (size_t j = 0; j < n; ++j) {
        cols[j] = basis.cols[j];
        cols[j].resize(m + n, Rat(0));
        cols[j][m + j] = eps[j];
    }
    return lat::Basis::make(std::move(cols));
}

} // namespace

PaddedBasis pad_svp_basis(const lat::Basis& basis) {
    require_reduced(basis, "pad_svp_basis");
    const long n = static_cast<long>(basis.rank_n());
    PaddedBasis res;
    res.dref = num::sqrt_upper(lin::norm2_sq(basis.cols[0]), 32);
    res.eps.resize(basis.rank_n());
    for (long i = 1; i <= n; ++i)
        res.eps[i - 1] =
            num::pow2q(checked_exp(2 * (i - 1) * n - 2 * n * n)) * res.dref;
    res.basis = pad_columns(basis, res.eps);
    return res;
}

PaddedCvp pad_cvp_instance(const lat::Basis& basis, const VecQ& target) {
    require_reduced(basis, "pad_cvp_instance");
    const long n = static_cast<long>(basis.rank_n());
    reduce::BabaiResult bab = reduce::babai_shift(basis.cols, target);
    Rat dsq = reduce::babai_distance_sq(bab);
    if (dsq == 0)
        throw DomainError("pad_cvp_instance: target lies in the lattice");
    PaddedCvp res;
    res.dref = num::sqrt_upper(dsq, 32);
    res.eps.resize(basis.rank_n());
    for (long i = 1; i <= n; ++i)
        res.eps[i - 1] = num::pow2q(checked_exp(11 * (i - 1) * n * n - 11 * n * n * n)) *
                         res.dref;
    res.basis = pad_columns(basis, res.eps);
    res.target = target;
    res.target.resize(target.size() + basis.rank_n(), Rat(0));
    return res;
}

GapMeasure measure_gap(const lat::Basis& basis, uint64_t guard) {
    if (basis.rank_n() < 2)
        throw DomainError("measure_gap needs rank >= 2");
    reduce::LllResult red = reduce::lll_reduce_ex(basis.cols);
    Rat ref_sq = lin::norm2_sq(red.cols[0]);
    Rat c2 = lin::norm2_sq(red.cols[1]);
    if (c2 > ref_sq)
        ref_sq = c2;
    std::vector<BigInt> zb = oracle::coeff_box_for_length(red.cols, ref_sq);

    // First pass: lambda_1 and its (lexicographically first) witness.
    std::optional<Rat> best1;
    lin::VecZ z1;
    oracle::for_each_in_box(zb, guard, [&](const lin::VecZ& z) {
        if (lin::is_zero(z))
            return true;
        Rat v = lin::norm2_sq(lin::mul(red.cols, z));
        if (!best1 || v < *best1) {
            best1 = v;
            z1 = z;
        }
        return true;
    });

    // Second pass: least vector linearly independent of z1 (some cross
    // product z_i * z1_j - z_j * z1_i nonzero).
    std::optional<Rat> best2;
    lin::VecZ z2;
    oracle::for_each_in_box(zb, guard, [&](const lin::VecZ& z) {
        if (lin::is_zero(z))
            return true;
        bool dependent = true;
        for (size_t i = 0; i < z.size() && dependent; ++i)
            for (size_t j = i + 1; j < z.size() && dependent; ++j)
                if (z[i] * z1[j] != z[j] * z1[i])
                    dependent = false;
        if (dependent)
            return true;
        Rat v = lin::norm2_sq(lin::mul(red.cols, z));
        if (!best2 || v < *best2) {
            best2 = v;
            z2 = z;
        }
        return true;
    });
    if (!best2)
        throw GuardError("measure_gap: no independent vector in the search box");

    GapMeasure out;
    out.lambda1_sq = *best1;
    out.lambda2_sq = *best2;
    out.v1 = lin::mul(red.transform, z1);
    out.v2 = lin::mul(red.transform, z2);
    return out;
}

} // namespace latcomp::amplify
