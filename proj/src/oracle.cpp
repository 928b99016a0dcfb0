#include "latcomp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace latcomp::oracle {

namespace {

void check_guard(const std::vector<BigInt>& zb, uint64_t guard) {
    BigInt points = 1;
    for (const BigInt& b : zb) {
        if (b < 0)
            throw DomainError("enumeration bound must be >= 0");
        points *= 2 * b + 1;
        if (points > BigInt(static_cast<unsigned long>(guard)))
            throw GuardError("enumeration box exceeds the point guard");
    }
}

// Odometer over the product box [-zb_i, zb_i], last coordinate fastest, so
// points come out in lexicographic order.  Visitor returns false to stop.
template <typename F>
void enumerate_box(const std::vector<BigInt>& zb, uint64_t guard, F&& visit) {
    check_guard(zb, guard);
    const size_t n = zb.size();
    VecZ z(n);
    for (size_t i = 0; i < n; ++i)
        z[i] = -zb[i];
    while (true) {
        if (!visit(z))
            return;
        size_t i = n;
        while (i > 0) {
            --i;
            if (z[i] < zb[i]) {
                ++z[i];
                for (size_t k = i + 1; k < n; ++k)
                    z[k] = -zb[k];
                break;
            }
            if (i == 0)
                return;
        }
        if (n == 0)
            return;
    }
}

Rat dist_pow(const ColsQ& cols, const VecQ& target, const VecZ& z, unsigned p) {
    VecQ v = lin::mul(cols, z);
    for (size_t i = 0; i < v.size(); ++i)
        v[i] -= target[i];
    return p == 2 ? lin::norm2_sq(v) : lin::norm_pow(v, p);
}

Rat len_pow(const ColsQ& cols, const VecZ& z, unsigned p) {
    VecQ v = lin::mul(cols, z);
    return p == 2 ? lin::norm2_sq(v) : lin::norm_pow(v, p);
}

void check_p(unsigned p) {
    if (p < 2 || p % 2 != 0)
        throw DomainError("ell_p oracles require even p >= 2");
}

// Backward  Zb_i = floor(Yb_i + sum_{k>i} |mu_{k,i}| Zb_k)  from per-level
// bounds Yb_i on the GSO coefficients of any qualifying point.
std::vector<BigInt> zbounds_backward(const reduce::Gso& g,
                                     const std::vector<Rat>& yb) {
    const size_t n = g.bstar_sq.size();
    std::vector<BigInt> zb(n);
    for (size_t ii = n; ii > 0; --ii) {
        const size_t i = ii - 1;
        Rat acc = yb[i];
        for (size_t k = i + 1; k < n; ++k) {
            Rat a = g.mu[k][i] < 0 ? -g.mu[k][i] : g.mu[k][i];
            acc += a * Rat(zb[k]);
        }
        zb[i] = num::rational_floor(acc);
    }
    return zb;
}

std::vector<BigInt> zbounds_from_gso(const reduce::Gso& g, const Rat& ref_sq,
                                     const BigInt& mult) {
    const size_t n = g.bstar_sq.size();
    std::vector<Rat> yb(n);
    for (size_t i = 0; i < n; ++i)
        yb[i] = num::sqrt_upper(Rat(mult) * ref_sq / g.bstar_sq[i], 32);
    return zbounds_backward(g, yb);
}

} // namespace

BruteResult brute_cvp(const Basis& basis, const VecQ& target, const BigInt& box,
                      unsigned p, uint64_t guard) {
    check_p(p);
    if (target.size() != basis.dim_m())
        throw DomainError("brute_cvp: target dimension mismatch");
    std::vector<BigInt> zb(basis.rank_n(), box);
    std::optional<BruteResult> best;
    enumerate_box(zb, guard, [&](const VecZ& z) {
        Rat v = dist_pow(basis.cols, target, z, p);
        if (!best || v < best->value)
            best = BruteResult{z, v};
        return true;
    });
    return *best;
}

BruteResult brute_svp(const Basis& basis, const BigInt& box, unsigned p,
                      uint64_t guard) {
    check_p(p);
    if (box < 1)
        throw DomainError("brute_svp: box must cover a nonzero point");
    std::vector<BigInt> zb(basis.rank_n(), box);
    std::optional<BruteResult> best;
    enumerate_box(zb, guard, [&](const VecZ& z) {
        if (lin::is_zero(z))
            return true;
        Rat v = len_pow(basis.cols, z, p);
        if (!best || v < best->value)
            best = BruteResult{z, v};
        return true;
    });
    return *best;
}

std::vector<VecZ> brute_cvp_all(const Basis& basis, const VecQ& target,
                                const BigInt& box, unsigned p, size_t cap,
                                uint64_t guard) {
    check_p(p);
    std::vector<BigInt> zb(basis.rank_n(), box);
    std::vector<VecZ> mins;
    std::optional<Rat> best;
    enumerate_box(zb, guard, [&](const VecZ& z) {
        Rat v = dist_pow(basis.cols, target, z, p);
        if (!best || v < *best) {
            best = v;
            mins.clear();
        }
        if (v == *best) {
            if (mins.size() == cap)
                throw GuardError("brute_cvp_all: too many minimisers");
            mins.push_back(z);
        }
        return true;
    });
    return mins;
}

std::vector<BigInt> certified_cvp_box(const ColsQ& reduced, const VecQ& shifted,
                                      unsigned p) {
    check_p(p);
    reduce::Gso g = reduce::gso(reduced);
    Rat ref_sq = lin::norm2_sq(shifted);
    const unsigned long m = shifted.size();
    BigInt mult = p == 2 ? BigInt(4) : BigInt(4) * BigInt(m);
    return zbounds_from_gso(g, ref_sq, mult);
}

std::vector<BigInt> certified_svp_box(const ColsQ& reduced, unsigned p) {
    check_p(p);
    reduce::Gso g = reduce::gso(reduced);
    Rat ref_sq = lin::norm2_sq(reduced[0]);
    const unsigned long m = reduced[0].size();
    BigInt mult = p == 2 ? BigInt(1) : BigInt(m);
    return zbounds_from_gso(g, ref_sq, mult);
}

std::vector<BigInt> coeff_box_for_target(const ColsQ& cols, const VecQ& t,
                                         const Rat& ref_sq) {
    if (ref_sq < 0)
        throw DomainError("coeff_box_for_target: negative reference");
    reduce::Gso g = reduce::gso(cols);
    const size_t n = cols.size();
    // Any z with ||C z - t||_2^2 <= ref_sq has GSO coefficients x_i with
    // |x_i - xt_i| * ||c*_i|| <= sqrt(ref_sq), where xt_i are the GSO
    // coefficients of t itself.
    std::vector<Rat> yb(n);
    for (size_t i = 0; i < n; ++i) {
        Rat xt = lin::dot(t, g.bstar[i]) / g.bstar_sq[i];
        if (xt < 0)
            xt = -xt;
        yb[i] = xt + num::sqrt_upper(ref_sq / g.bstar_sq[i], 32);
    }
    return zbounds_backward(g, yb);
}

std::vector<BigInt> coeff_box_for_length(const ColsQ& reduced, const Rat& ref_sq) {
    if (ref_sq < 0)
        throw DomainError("coeff_box_for_length: negative reference");
    reduce::Gso g = reduce::gso(reduced);
    return zbounds_from_gso(g, ref_sq, BigInt(1));
}

void for_each_in_box(const std::vector<BigInt>& zb, uint64_t guard,
                     const std::function<bool(const VecZ&)>& visit) {
    enumerate_box(zb, guard, visit);
}

BruteResult exact_cvp(const Basis& basis, const VecQ& target, unsigned p,
                      uint64_t guard) {
    check_p(p);
    reduce::LllResult red = reduce::lll_reduce_ex(basis.cols);
    reduce::BabaiResult bab = reduce::babai_shift(red.cols, target);
    std::vector<BigInt> zb = certified_cvp_box(red.cols, bab.shifted, p);
    std::optional<BruteResult> best;
    enumerate_box(zb, guard, [&](const VecZ& z) {
        Rat v = dist_pow(red.cols, bab.shifted, z, p);
        if (!best || v < best->value)
            best = BruteResult{z, v};
        return true;
    });
    VecZ zc(basis.rank_n());
    for (size_t i = 0; i < zc.size(); ++i)
        zc[i] = best->z[i] + bab.w[i];
    return BruteResult{lin::mul(red.transform, zc), best->value};
}

BruteResult exact_svp(const Basis& basis, unsigned p, uint64_t guard) {
    check_p(p);
    reduce::LllResult red = reduce::lll_reduce_ex(basis.cols);
    std::vector<BigInt> zb = certified_svp_box(red.cols, p);
    std::optional<BruteResult> best;
    enumerate_box(zb, guard, [&](const VecZ& z) {
        if (lin::is_zero(z))
            return true;
        Rat v = len_pow(red.cols, z, p);
        if (!best || v < best->value)
            best = BruteResult{z, v};
        return true;
    });
    return BruteResult{lin::mul(red.transform, best->z), best->value};
}

BigInt default_svp_box(size_t n) {
    if (n < 1)
        throw DomainError("default_svp_box: n >= 1");
    return num::isqrt_ceil(num::pow2z(3 * (n - 1)));
}

namespace {

// residue -> smallest low-half mask reaching it
std::unordered_map<std::string, uint64_t>
low_sums(const std::vector<BigInt>& vals, size_t h, const BigInt* mod) {
    std::unordered_map<std::string, uint64_t> map;
    const uint64_t lim = uint64_t(1) << h;
    for (uint64_t mask = 0; mask < lim; ++mask) {
        BigInt s = 0;
        for (size_t i = 0; i < h; ++i)
            if (mask >> i & 1)
                s += vals[i];
        if (mod)
            mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod->get_mpz_t());
        map.emplace(s.get_str(), mask); // first = smallest mask
    }
    return map;
}

std::optional<uint64_t> mitm_mask(const std::vector<BigInt>& vals,
                                  const BigInt& target, const BigInt* mod) {
    const size_t n = vals.size();
    if (n > 24)
        throw GuardError("subset-sum search limited to n <= 24");
    const size_t h = n / 2;
    auto low = low_sums(vals, h, mod);
    const uint64_t lim = uint64_t(1) << (n - h);
    for (uint64_t mask = 0; mask < lim; ++mask) {
        BigInt s = target;
        for (size_t i = 0; i < n - h; ++i)
            if (mask >> i & 1)
                s -= vals[h + i];
        if (mod)
            mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod->get_mpz_t());
        auto it = low.find(s.get_str());
        if (it != low.end())
            return it->second | mask << h;
    }
    return std::nullopt;
}

lat::Verdict verdict_from_mask(std::optional<uint64_t> mask,
                               const std::vector<BigInt>& vals,
                               const BigInt* mod) {
    lat::Verdict v;
    if (!mask) {
        v.yes = false;
        return v;
    }
    v.yes = true;
    VecZ idx;
    BigInt s = 0;
    for (size_t i = 0; i < vals.size(); ++i)
        if (*mask >> i & 1) {
            idx.push_back(BigInt(static_cast<unsigned long>(i + 1)));
            s += vals[i];
        }
    if (mod)
        mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod->get_mpz_t());
    v.witness = std::move(idx);
    v.value = Rat(s);
    return v;
}

} // namespace

lat::Verdict brute_subsetsum(const lat::SubsetSumInstance& inst) {
    return verdict_from_mask(mitm_mask(inst.values, inst.target, nullptr),
                             inst.values, nullptr);
}

lat::Verdict decide_mod_subsetsum(const lat::ModSubsetSumInstance& inst) {
    lat::validate(inst);
    return verdict_from_mask(
        mitm_mask(inst.residues, inst.target, &inst.modulus), inst.residues,
        &inst.modulus);
}

lat::Verdict decide_compressed(const lat::RqCompressed& inst,
                               const std::optional<BigInt>& box_override,
                               uint64_t guard) {
    lat::validate(inst);
    const BigInt box = box_override ? *box_override : inst.r;
    std::vector<BigInt> zb(inst.form.n, box);
    lat::Verdict v;
    std::optional<BigInt> min_res;
    enumerate_box(zb, guard, [&](const VecZ& z) {
        BigInt res = lat::eval_dist_pow_mod(inst.form, z, inst.q);
        if (!min_res || res < *min_res)
            min_res = res;
        if (res <= inst.dpp) {
            v.yes = true;
            v.witness = z;
            v.value = Rat(res);
            return false;
        }
        return true;
    });
    if (!v.yes && min_res)
        v.value = Rat(*min_res);
    return v;
}

} // namespace latcomp::oracle
