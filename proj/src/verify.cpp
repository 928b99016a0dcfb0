#include "latcomp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "latcomp/compress_subsetsum.hpp"
#include "latcomp/compress_svp.hpp"
#include "latcomp/gap_amplify.hpp"
#include "latcomp/oracle.hpp"

namespace latcomp::verify {

namespace {

using lin::ColsQ;
using lin::ColsZ;
using lin::VecQ;
using lin::VecZ;
using num::BigInt;
using num::Rat;
using num::Rng;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
            .count();
    }
};

double as_double(const Rat& x) { return mpq_get_d(x.get_mpq_t()); }

std::string fmt2(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

Rat rat_pow(const Rat& x, unsigned p) {
    Rat r = 1;
    for (unsigned i = 0; i < p; ++i)
        r *= x;
    return r;
}

VecZ random_vecz(Rng& rng, size_t n, long bound) {
    VecZ v(n);
    for (auto& e : v)
        e = rng.uniform_bigint(BigInt(-bound), BigInt(bound));
    return v;
}

void finish(CampaignResult& res, const Timer& timer, int tolerated = 0) {
    res.seconds = timer.elapsed();
    res.pass = res.failures <= tolerated;
}

void note_error(CampaignResult& res, const Error& e) {
    if (res.note.empty())
        res.note = std::string("first error: ") + e.what();
}

// Coefficients of the compressed form corresponding to basis coefficients z
// of the original instance: solve in the reduced basis, undo the shift.
std::optional<VecZ> map_witness(const compress::CvpCompression& comp,
                                const lat::Basis& basis, const VecZ& z) {
    VecQ v = lin::mul(basis.cols, z);
    std::optional<VecQ> sol = lin::solve(comp.coeff.cols, v);
    if (!sol)
        return std::nullopt;
    return lin::sub(lin::to_int(*sol), comp.coeff.w);
}

// Upper bound on ||C z - t||_p^p over the whole box |z_i| <= r.  When this
// stays below q, the modular evaluation equals the exact one everywhere and
// the compressed decision is free of wraparound.
BigInt eval_ceiling(const ColsZ& cols, const VecZ& target, const BigInt& r,
                    unsigned p) {
    const size_t m = target.size();
    BigInt total = 0;
    for (size_t row = 0; row < m; ++row) {
        BigInt mrow = abs(target[row]);
        for (size_t j = 0; j < cols.size(); ++j)
            mrow += r * BigInt(abs(cols[j][row]));
        total += num::ipow(mrow, p);
    }
    return total;
}

// ell_2 ball certainly containing every z in the compressed YES predicate:
// ||v||_2^2 <= (m^(p-2) dpp^2)^(1/p) whenever ||v||_p^p <= dpp.
Rat no_scan_ref_sq(const compress::CvpCompression& comp, unsigned p) {
    if (p == 2)
        return Rat(comp.out.dpp);
    const BigInt m(static_cast<unsigned long>(comp.trunc_target.size()));
    Rat inside = Rat(num::ipow(m, p - 2)) * Rat(comp.out.dpp) * Rat(comp.out.dpp);
    return num::root_upper(inside, p, 32);
}

std::vector<BigInt> no_scan_box(const compress::CvpCompression& comp,
                                unsigned p) {
    std::vector<BigInt> zb = oracle::coeff_box_for_target(
        lin::to_rat(comp.trunc_cols), lin::to_rat(comp.trunc_target),
        no_scan_ref_sq(comp, p));
    for (auto& b : zb)
        if (b > comp.out.r)
            b = comp.out.r;
    return zb;
}

enum class NoCheck { preserved, false_positive, incomplete };

// Decisive NO check: certify that no wraparound is possible over the whole
// r-box, then scan the certified ell_2 sub-box with exact evaluation (every
// qualifying point must lie inside it).
NoCheck check_no_full(const compress::CvpCompression& comp, unsigned p) {
    if (eval_ceiling(comp.trunc_cols, comp.trunc_target, comp.out.r, p) >=
        comp.out.q)
        return NoCheck::incomplete;
    bool fp = false;
    try {
        oracle::for_each_in_box(
            no_scan_box(comp, p), oracle::kEnumGuard, [&](const VecZ& z) {
                VecZ v = lin::sub(lin::mul(comp.trunc_cols, z),
                                  comp.trunc_target);
                if (lin::norm_pow(v, p) <= comp.out.dpp) {
                    fp = true;
                    return false;
                }
                return true;
            });
    } catch (const GuardError&) {
        return NoCheck::incomplete;
    }
    return fp ? NoCheck::false_positive : NoCheck::preserved;
}

// Statistical NO check for scaled moduli too small for the wraparound
// certificate: modular scan of the certified sub-box (catches geometric
// survivors) plus uniform samples from the full r-box (catches aliasing).
NoCheck check_no_sampled(const compress::CvpCompression& comp, unsigned p,
                         Rng& rng, int samples) {
    bool fp = false;
    try {
        oracle::for_each_in_box(
            no_scan_box(comp, p), oracle::kEnumGuard, [&](const VecZ& z) {
                if (lat::eval_dist_pow_mod(comp.out.form, z, comp.out.q) <=
                    comp.out.dpp) {
                    fp = true;
                    return false;
                }
                return true;
            });
    } catch (const GuardError&) {
        return NoCheck::incomplete;
    }
    const size_t n = comp.out.form.n;
    VecZ z(n);
    for (int s = 0; s < samples && !fp; ++s) {
        for (size_t i = 0; i < n; ++i)
            z[i] = rng.uniform_bigint(-comp.out.r, comp.out.r);
        if (lat::eval_dist_pow_mod(comp.out.form, z, comp.out.q) <=
            comp.out.dpp)
            fp = true;
    }
    return fp ? NoCheck::false_positive : NoCheck::preserved;
}

} // namespace

// ---- instance planting ----

ColsQ random_basis_cols(Rng& rng, size_t n, size_t m, unsigned bits) {
    const BigInt hi = num::pow2z(bits) - 1;
    for (;;) {
        ColsQ cols(n, VecQ(m));
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < m; ++i)
                cols[j][i] = Rat(rng.uniform_bigint(-hi, hi));
        if (lin::rank(cols) == n)
            return cols;
    }
}

lat::SubsetSumInstance plant_subsetsum(Rng& rng, size_t n, unsigned long eta,
                                       bool yes) {
    if (n == 0 || n > 24)
        throw DomainError("plant_subsetsum: n must be in [1, 24]");
    lat::SubsetSumInstance inst;
    inst.values.resize(n);
    BigInt sum = 0;
    for (auto& v : inst.values) {
        v = rng.uniform_bigint(1, num::pow2z(eta));
        sum += v;
    }
    if (yes) {
        const uint64_t mask = rng.uniform_u64(1, (uint64_t(1) << n) - 1);
        inst.target = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                inst.target += inst.values[i];
    } else {
        do {
            inst.target = rng.uniform_bigint(1, sum);
        } while (oracle::brute_subsetsum(inst).yes);
    }
    return inst;
}

lat::GapCvpInstance plant_cvp_yes(Rng& rng, lat::Basis basis, unsigned p) {
    const size_t n = basis.rank_n();
    const size_t m = basis.dim_m();
    VecQ t = lin::mul(basis.cols, random_vecz(rng, n, 2));
    t[rng.uniform_u64(0, m - 1)] += Rat(1, 2);
    lat::GapCvpInstance inst;
    inst.basis = std::move(basis);
    inst.target = std::move(t);
    inst.d = Rat(1, 2);
    inst.gamma = Rat(1) + num::pow2q(-static_cast<long>(n));
    inst.p = p;
    if (p != 2)
        inst.promise_tau = Rat(1); // dist <= 1/2 < 1 <= lambda_1
    return inst;
}

std::optional<lat::GapCvpInstance> plant_cvp_no(Rng& rng, lat::Basis basis,
                                                unsigned p, bool integral) {
    const size_t n = basis.rank_n();
    const size_t m = basis.dim_m();
    const Rat lp = oracle::exact_svp(basis, p).value;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rat rho = Rat(2) * num::root_upper(lp, p, 8);
        if (integral)
            rho = Rat(num::rational_ceil(rho));
        VecQ t = lin::mul(basis.cols, random_vecz(rng, n, 2));
        t[rng.uniform_u64(0, m - 1)] += rho;
        Rat dp = oracle::exact_cvp(basis, t, p).value;
        if (dp == 0)
            continue;
        Rat dlb = num::root_lower(dp, p, 8);
        if (dlb <= 0)
            continue;
        lat::GapCvpInstance inst;
        inst.basis = basis;
        inst.target = std::move(t);
        inst.gamma = Rat(1) + num::pow2q(-static_cast<long>(n));
        inst.d = dlb / (Rat(2) * inst.gamma);
        inst.p = p;
        if (p != 2) {
            Rat tau = num::root_upper(dp / lp, p, 8);
            if (tau < 1)
                tau = 1;
            inst.promise_tau = tau;
        }
        // planting sanity: (gamma d)^p = (dlb/2)^p <= dp / 2^p < dp
        if (rat_pow(inst.gamma * inst.d, p) >= dp)
            continue;
        return inst;
    }
    return std::nullopt;
}

lat::GapSvpInstance plant_svp_yes(lat::Basis basis, unsigned p) {
    lat::GapSvpInstance inst;
    // ||c_1||_2 of the reduction dominates ||c_1||_p and so lambda_1 in ell_p
    inst.d = num::sqrt_upper(reduce::svp_length_sq(basis), 8);
    inst.gamma = Rat(1) + num::pow2q(-static_cast<long>(basis.rank_n()));
    inst.p = p;
    inst.basis = std::move(basis);
    return inst;
}

std::optional<lat::GapSvpInstance> plant_svp_no(lat::Basis basis, unsigned p) {
    const Rat lp = oracle::exact_svp(basis, p).value;
    const Rat llb = num::root_lower(lp, p, 8);
    if (llb <= 0)
        return std::nullopt;
    lat::GapSvpInstance inst;
    inst.gamma = Rat(1) + num::pow2q(-static_cast<long>(basis.rank_n()));
    inst.d = llb / (Rat(2) * inst.gamma);
    inst.p = p;
    inst.basis = std::move(basis);
    // (gamma d)^p = (llb/2)^p <= lp / 2^p < lp
    if (rat_pow(inst.gamma * inst.d, p) >= lp)
        return std::nullopt;
    return inst;
}

CampaignResult subsetsum_completeness(int trials, uint64_t seed) {
    CampaignResult res{"subsetsum-completeness", trials};
    Timer timer;
    Rng root = Rng(seed).derive("ss-complete");
    for (int t = 0; t < trials; ++t) {
        Rng rng = root.derive("trial", static_cast<uint64_t>(t));
        try {
            const size_t n = 4 + rng.uniform_u64(0, 8);
            lat::SubsetSumInstance inst = plant_subsetsum(rng, n, 16, true);
            lat::PipelineParams params;
            params.seed = rng.derive("pipe").seed();
            auto comp = compress::compress_subsetsum(inst, params);
            if (!oracle::decide_mod_subsetsum(comp.out).yes)
                ++res.failures;
        } catch (const Error& e) {
            ++res.failures;
            note_error(res, e);
        }
    }
    finish(res, timer);
    if (res.note.empty())
        res.note = "planted YES, n in [4,12], values < 2^16; no false negatives allowed";
    return res;
}

CampaignResult subsetsum_soundness(int trials, uint64_t seed,
                                   std::optional<unsigned> scaled_s,
                                   int max_fp) {
    CampaignResult res{scaled_s ? "subsetsum-soundness-scaled"
                                : "subsetsum-soundness-full",
                       trials};
    Timer timer;
    Rng root = Rng(seed).derive("ss-sound");
    for (int t = 0; t < trials; ++t) {
        Rng rng = root.derive("trial", static_cast<uint64_t>(t));
        try {
            const size_t n = 4 + rng.uniform_u64(0, 8);
            lat::SubsetSumInstance inst = plant_subsetsum(rng, n, 16, false);
            lat::PipelineParams params;
            params.scaled_s = scaled_s;
            params.seed = rng.derive("pipe").seed();
            auto comp = compress::compress_subsetsum(inst, params);
            if (oracle::decide_mod_subsetsum(comp.out).yes)
                ++res.failures;
        } catch (const Error& e) {
            ++res.failures;
            note_error(res, e);
        }
    }
    finish(res, timer, max_fp);
    if (res.note.empty()) {
        std::ostringstream os;
        os << "certified NO; false positives " << res.failures << "/"
           << trials << ", tolerated " << max_fp;
        if (scaled_s)
            os << " (primes in [2^" << *scaled_s << ", 2^" << 2 * *scaled_s
               << "])";
        res.note = os.str();
    }
    return res;
}

CampaignResult mvp_identity(int trials, uint64_t seed) {
    CampaignResult res{"mvp-identity", trials};
    Timer timer;
    Rng root = Rng(seed).derive("mvp-id");
    const unsigned ps[3] = {2, 4, 6};
    for (int t = 0; t < trials; ++t) {
        Rng rng = root.derive("trial", static_cast<uint64_t>(t));
        try {
            const size_t n = 1 + rng.uniform_u64(0, 3);
            const size_t m = n + rng.uniform_u64(0, 5 - n);
            const unsigned p = ps[t % 3];
            const BigInt hi = num::pow2z(8);
            ColsZ cols(n, VecZ(m));
            for (auto& col : cols)
                for (auto& e : col)
                    e = rng.uniform_bigint(-hi, hi);
            VecZ target(m);
            for (auto& e : target)
                e = rng.uniform_bigint(-hi, hi);
            VecZ z = random_vecz(rng, n, 4);

            lat::MvpForm f = lat::mvp_form(cols, target, p);
            VecZ v = lin::sub(lin::mul(cols, z), target);
            bool ok = lat::eval_dist_pow(f, z) == lin::norm_pow(v, p);
            if (ok && p == 2) {
                lat::IpForm ip = lat::ip_form(cols, target);
                ok = lat::eval_dist_sq(ip, z) == lin::norm_pow(v, 2);
            }
            if (!ok)
                ++res.failures;
        } catch (const Error& e) {
            ++res.failures;
            note_error(res, e);
        }
    }
    finish(res, timer);
    if (res.note.empty())
        res.note = "exact form evaluation, p in {2,4,6}, n <= 4, m <= 5";
    return res;
}

CampaignResult lll_contracts(int trials, uint64_t seed) {
    CampaignResult res{"lll-contracts", trials};
    Timer timer;
    Rng root = Rng(seed).derive("lll");
    for (int t = 0; t < trials; ++t) {
        Rng rng = root.derive("trial", static_cast<uint64_t>(t));
        try {
            const size_t n = 2 + rng.uniform_u64(0, 4);
            const size_t m = n + rng.uniform_u64(0, 2);
            ColsQ cols = random_basis_cols(rng, n, m, 12);
            ColsQ red = reduce::lll_reduce(cols);

            reduce::LllConditions cond = reduce::check_lll_conditions(red);
            bool ok = cond.size_reduced && cond.successive_norms;

            // same lattice: equal column-style HNF
            ok = ok && reduce::hnf(lin::to_int(cols)) == reduce::hnf(lin::to_int(red));

            if (ok && n <= 4) {
                // ||b_1||^2 <= 2^n * lambda_1^2 against the exact oracle
                Rat lam_sq =
                    oracle::exact_svp(lat::Basis{cols}).value;
                ok = lin::norm2_sq(red[0]) <=
                     num::pow2q(static_cast<long>(n)) * lam_sq;
                if (ok && n <= 3) {
                    // unit-scale scan box agrees with the certified oracle
                    oracle::BruteResult b = oracle::brute_svp(
                        lat::Basis{red}, oracle::default_svp_box(n));
                    ok = b.value == lam_sq;
                }
            }
            if (!ok)
                ++res.failures;
        } catch (const Error& e) {
            ++res.failures;
            note_error(res, e);
        }
    }
    finish(res, timer);
    if (res.note.empty())
        res.note = "size reduction, successive norms, lattice equality, "
                   "first-vector quality";
    return res;
}

CampaignResult babai_contracts(int trials, uint64_t seed) {
    CampaignResult res{"babai-contracts", trials};
    Timer timer;
    Rng root = Rng(seed).derive("babai");
    for (int t = 0; t < trials; ++t) {
        Rng rng = root.derive("trial", static_cast<uint64_t>(t));
        try {
            const size_t n = 2 + rng.uniform_u64(0, 3);
            const size_t m = n + rng.uniform_u64(0, 2);
            ColsQ red = reduce::lll_reduce(random_basis_cols(rng, n, m, 10));
            VecQ target(m);
            const BigInt hi = num::pow2z(10);
            for (auto& e : target)
                e = num::make_rat(rng.uniform_bigint(-hi, hi), 2);

            reduce::BabaiResult bab = reduce::babai_shift(red, target);
            bool ok = true;
            for (const Rat& r : bab.residuals)
                ok = ok && r > Rat(-1, 2) && r <= Rat(1, 2);

            if (ok && n <= 3) {
                Rat d2 = reduce::babai_distance_sq(bab);
                Rat dist2 =
                    oracle::exact_cvp(lat::Basis{red}, target).value;
                ok = dist2 <= d2 &&
                     d2 <= num::pow2q(static_cast<long>(n)) * dist2;
            }
            if (!ok)
                ++res.failures;
        } catch (const Error& e) {
            ++res.failures;
            note_error(res, e);
        }
    }
    finish(res, timer);
    if (res.note.empty())
        res.note = "residuals in (-1/2, 1/2]; distance within 2^(n/2) of exact";
    return res;
}

CampaignResult coeff_bounds(int trials, uint64_t seed) {
    CampaignResult res{"coeff-bounds", trials};
    Timer timer;
    Rng root = Rng(seed).derive("coeff");

    // every minimiser of the shifted instance must fit strictly in the box
    auto minimisers_fit = [](const reduce::CoeffBound& cb, unsigned p) {
        std::vector<BigInt> zb =
            oracle::certified_cvp_box(cb.cols, cb.shifted, p);
        std::optional<Rat> best;
        bool fit = true;
        oracle::for_each_in_box(
            zb, oracle::kEnumGuard, [&](const VecZ& z) {
                VecQ v = lin::sub(lin::mul(cb.cols, z), cb.shifted);
                Rat val = lin::norm_pow(v, p);
                if (!best || val < *best) {
                    best = val;
                    fit = true;
                }
                if (val == *best)
                    for (const BigInt& e : z)
                        fit = fit && e < cb.box && -e < cb.box;
                return true;
            });
        return fit;
    };

    for (int t = 0; t < trials; ++t) {
        Rng rng = root.derive("trial", static_cast<uint64_t>(t));
        try {
            const size_t n = 2 + rng.uniform_u64(0, 1);
            const size_t m = n + rng.uniform_u64(0, 4 - n);
            lat::Basis basis = lat::Basis::make(random_basis_cols(rng, n, m, 8));
            VecQ target(m);
            const BigInt hi = num::pow2z(8);
            for (auto& e : target)
                e = num::make_rat(rng.uniform_bigint(-hi, hi), 2);

            bool ok = minimisers_fit(
                reduce::bound_coefficients_l2(basis, target), 2);

            // ell_4 with a true promise from the exact oracles
            Rat dp = oracle::exact_cvp(basis, target, 4).value;
            Rat lp = oracle::exact_svp(basis, 4).value;
            Rat tau = dp == 0 ? Rat(1) : num::root_upper(dp / lp, 4, 8);
            if (tau < 1)
                tau = 1;
            ok = ok && minimisers_fit(
                           reduce::bound_coefficients_lp(basis, target, 4, tau),
                           4);
            if (!ok)
                ++res.failures;
        } catch (const Error& e) {
            ++res.failures;
            note_error(res, e);
        }
    }
    finish(res, timer);
    if (res.note.empty())
        res.note = "all exact-closest coefficient vectors strictly inside "
                   "the advertised boxes";
    return res;
}

CampaignResult cvp_pipeline(int yes_trials, int no_trials, unsigned p,
                            std::optional<unsigned> scaled_s, int max_no_fp,
                            uint64_t seed) {
    std::ostringstream name;
    name << "cvp-pipeline-l" << p << (scaled_s ? "-scaled" : "-full");
    CampaignResult res{name.str(), yes_trials + no_trials};
    Timer timer;
    Rng root = Rng(seed).derive(scaled_s ? "cvp-pipe-scaled" : "cvp-pipe", p);

    const unsigned bits = p == 2 ? 8 : 5;
    auto dims = [&](int t, size_t& n, size_t& m) {
        if (p == 2)
            n = scaled_s ? 2 : 2 + static_cast<size_t>(t % 2);
        else
            n = 3; // smaller ranks leave no room between box and r at p >= 4
        m = n + static_cast<size_t>(t % 2);
    };

    int yes_failures = 0;
    for (int t = 0; t < yes_trials; ++t) {
        Rng rng = root.derive("yes", static_cast<uint64_t>(t));
        try {
            size_t n = 0, m = 0;
            dims(t, n, m);
            lat::GapCvpInstance inst = plant_cvp_yes(
                rng, lat::Basis::make(random_basis_cols(rng, n, m, bits)), p);
            lat::PipelineParams params;
            params.scaled_s = scaled_s;
            params.seed = rng.derive("pipe").seed();
            compress::CvpCompression comp = compress::compress_cvp(inst, params);

            oracle::BruteResult e = oracle::exact_cvp(inst.basis, inst.target, p);
            bool ok = e.value <= rat_pow(inst.d, p); // planted property
            std::optional<VecZ> zc = map_witness(comp, inst.basis, e.z);
            ok = ok && zc.has_value();
            if (ok)
                for (const BigInt& c : *zc)
                    ok = ok && c <= comp.out.r && -c <= comp.out.r &&
                         c < comp.coeff.box && -c < comp.coeff.box;
            ok = ok && lat::eval_dist_pow_mod(comp.out.form, *zc, comp.out.q) <=
                           comp.out.dpp;
            if (!ok)
                ++yes_failures;
        } catch (const Error& e) {
            ++yes_failures;
            note_error(res, e);
        }
    }

    int no_fp = 0;
    int no_incomplete = 0;
    for (int t = 0; t < no_trials; ++t) {
        Rng rng = root.derive("no", static_cast<uint64_t>(t));
        try {
            size_t n = 0, m = 0;
            dims(t, n, m);
            std::optional<lat::GapCvpInstance> inst = plant_cvp_no(
                rng, lat::Basis::make(random_basis_cols(rng, n, m, bits)), p,
                scaled_s.has_value());
            if (!inst) {
                ++no_incomplete;
                continue;
            }
            lat::PipelineParams params;
            params.scaled_s = scaled_s;
            params.seed = rng.derive("pipe").seed();
            compress::CvpCompression comp =
                compress::compress_cvp(*inst, params);

            NoCheck verdict;
            if (!scaled_s) {
                verdict = check_no_full(comp, p);
            } else if (p == 2) {
                // modulus small enough that the whole r-box is scannable
                verdict = oracle::decide_compressed(comp.out).yes
                              ? NoCheck::false_positive
                              : NoCheck::preserved;
            } else {
                Rng sampler = rng.derive("alias-sample");
                verdict = check_no_sampled(comp, p, sampler, 20000);
            }
            if (verdict == NoCheck::false_positive)
                ++no_fp;
            else if (verdict == NoCheck::incomplete)
                ++no_incomplete;
        } catch (const Error& e) {
            ++no_incomplete;
            note_error(res, e);
        }
    }

    res.failures = yes_failures + no_fp + no_incomplete;
    res.seconds = timer.elapsed();
    // YES losses and incomplete checks are never tolerated; only scaled-mode
    // aliasing false positives fall under max_no_fp.
    res.pass = yes_failures == 0 && no_incomplete == 0 && no_fp <= max_no_fp;
    std::ostringstream os;
    os << "yes " << (yes_trials - yes_failures) << "/" << yes_trials
       << ", no " << (no_trials - no_fp - no_incomplete) << "/" << no_trials
       << " preserved";
    if (scaled_s)
        os << " (scaled s=" << *scaled_s
           << (p == 2 ? ", full-box decision" : ", sub-box + 20000 samples")
           << ")";
    else
        os << " (wraparound-free certificate + decisive sub-box scan)";
    if (!res.note.empty())
        os << "; " << res.note;
    res.note = os.str();
    return res;
}

CampaignResult svp_or(int trials, uint64_t seed) {
    CampaignResult res{"svp-or", trials};
    Timer timer;
    Rng root = Rng(seed).derive("svp-or");
    for (int t = 0; t < trials; ++t) {
        Rng rng = root.derive("trial", static_cast<uint64_t>(t));
        try {
            const size_t n = 2 + rng.uniform_u64(0, 1);
            const size_t m = n + rng.uniform_u64(0, 4 - n);
            lat::Basis basis = lat::Basis::make(random_basis_cols(rng, n, m, 6));

            Rat lam_sq = oracle::exact_svp(basis).value;
            lat::GapSvpInstance inst;
            inst.basis = basis;
            inst.d = num::sqrt_upper(lam_sq, 8);
            inst.gamma = Rat(1) + num::pow2q(-static_cast<long>(n));
            inst.p = 2;

            lat::PipelineParams params;
            params.seed = rng.derive("pipe").seed();
            compress::SvpCompression comp = compress::compress_svp(inst, params);
            bool ok = comp.members.size() == n;

            // every shortest vector must carry an odd coefficient
            std::vector<BigInt> zb = oracle::certified_svp_box(comp.reduced, 2);
            std::vector<VecZ> shortest;
            oracle::for_each_in_box(
                zb, oracle::kEnumGuard, [&](const VecZ& z) {
                    if (!lin::is_zero(z) &&
                        lin::norm2_sq(lin::mul(comp.reduced, z)) == lam_sq)
                        shortest.push_back(z);
                    return true;
                });
            ok = ok && !shortest.empty();
            for (const VecZ& z : shortest) {
                bool any_odd = false;
                for (size_t i = 0; i < n; ++i)
                    any_odd = any_odd || mpz_odd_p(z[i].get_mpz_t()) != 0;
                ok = ok && any_odd;
            }

            if (ok) {
                // the doubled-column member at an odd position stays YES:
                // u' = c_i - v is its exact-closest vector
                const VecZ& y = shortest.front();
                size_t i = 0;
                while (i < n && mpz_odd_p(y[i].get_mpz_t()) == 0)
                    ++i;
                VecZ zprime(n);
                for (size_t k = 0; k < n; ++k) {
                    if (k == i)
                        zprime[k] = (BigInt(1) - y[k]) / 2;
                    else
                        zprime[k] = -y[k];
                }
                const compress::CvpCompression& mem = comp.members[i];
                ColsQ mcols = comp.reduced;
                for (auto& e : mcols[i])
                    e *= 2;
                lat::Basis mbasis{std::move(mcols)};
                VecQ u = lin::mul(mbasis.cols, zprime);
                VecQ diff = lin::sub(u, comp.reduced[i]);
                ok = lin::norm2_sq(diff) == lam_sq;
                std::optional<VecZ> zc = map_witness(mem, mbasis, zprime);
                ok = ok && zc.has_value() &&
                     lat::eval_dist_pow_mod(mem.out.form, *zc, mem.out.q) <=
                         mem.out.dpp;
            }
            if (!ok)
                ++res.failures;
        } catch (const Error& e) {
            ++res.failures;
            note_error(res, e);
        }
    }
    finish(res, timer);
    if (res.note.empty())
        res.note = "odd-coefficient property brute-confirmed; some member "
                   "stays YES after compression";
    return res;
}

CampaignResult amplify_bounds(int trials, uint64_t seed) {
    CampaignResult res{"amplify-bounds", trials};
    Timer timer;
    Rng root = Rng(seed).derive("amplify");
    double gap_before_sum = 0, gap_after_sum = 0;
    int measured = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng = root.derive("trial", static_cast<uint64_t>(t));
        try {
            const size_t n = 2 + rng.uniform_u64(0, 1);
            const size_t m = n + rng.uniform_u64(0, 1);
            ColsQ red = reduce::lll_reduce(random_basis_cols(rng, n, m, 6));
            lat::Basis rbasis{red};

            // length side
            amplify::PaddedBasis pb = amplify::pad_svp_basis(rbasis);
            Rat l1 = oracle::exact_svp(rbasis).value;
            Rat l1p = oracle::exact_svp(pb.basis).value;
            bool ok = l1 < l1p && l1p <= Rat(2) * l1;

            // distance side; keep 0 out of the minimiser set so the padded
            // distance grows strictly
            VecQ target(m);
            Rat dist2;
            const BigInt hi = num::pow2z(6);
            for (int attempt = 0;; ++attempt) {
                for (auto& e : target)
                    e = num::make_rat(rng.uniform_bigint(-hi, hi), 2);
                dist2 = oracle::exact_cvp(rbasis, target).value;
                if (dist2 != 0 && dist2 != lin::norm2_sq(target))
                    break;
                if (attempt > 64)
                    throw DomainError("amplify campaign: no usable target");
            }
            amplify::PaddedCvp pc = amplify::pad_cvp_instance(rbasis, target);
            Rat dist2p = oracle::exact_cvp(pc.basis, pc.target).value;
            ok = ok && dist2 < dist2p && dist2p <= Rat(2) * dist2;

            // uniqueness gap: measured and reported, never asserted
            amplify::GapMeasure g0 = amplify::measure_gap(rbasis);
            amplify::GapMeasure g1 = amplify::measure_gap(pb.basis);
            gap_before_sum += as_double(g0.lambda2_sq / g0.lambda1_sq);
            gap_after_sum += as_double(g1.lambda2_sq / g1.lambda1_sq);
            ++measured;

            if (!ok)
                ++res.failures;
        } catch (const Error& e) {
            ++res.failures;
            note_error(res, e);
        }
    }
    finish(res, timer);
    if (res.note.empty() && measured > 0) {
        std::ostringstream os;
        os << "squared growth in (1, 2] everywhere; mean uniqueness gap "
           << fmt2(gap_before_sum / measured) << " -> "
           << fmt2(gap_after_sum / measured) << " (measured only)";
        res.note = os.str();
    }
    return res;
}

CampaignResult size_scaling(uint64_t seed) {
    CampaignResult res{"size-scaling", 2};
    Timer timer;
    Rng root = Rng(seed).derive("size");
    std::ostringstream os;
    try {
        // subset-sum: one K fits bits <= K * (n^2 + n log2(eta)) across n,
        // with values drawn just below 2^16 so log2(eta) = 4 exactly
        auto max_bits = [&](size_t n) {
            uint64_t worst = 0;
            for (int i = 0; i < 5; ++i) {
                Rng rng = root.derive("ss", n * 16 + static_cast<uint64_t>(i));
                lat::SubsetSumInstance inst;
                inst.values.resize(n);
                for (auto& v : inst.values)
                    v = rng.uniform_bigint(num::pow2z(15) + 1, num::pow2z(16));
                const uint64_t mask =
                    rng.uniform_u64(1, (uint64_t(1) << n) - 1);
                inst.target = 0;
                for (size_t k = 0; k < n; ++k)
                    if (mask >> k & 1)
                        inst.target += inst.values[k];
                lat::PipelineParams params;
                params.seed = rng.derive("pipe").seed();
                auto comp = compress::compress_subsetsum(inst, params);
                worst = std::max(worst, io::payload_bits(comp.out));
            }
            return worst;
        };
        const uint64_t b4 = max_bits(4), b8 = max_bits(8), b12 = max_bits(12);
        const Rat k = num::make_rat(BigInt(static_cast<unsigned long>(b4)),
                                    BigInt(4 * 4 + 4 * 4));
        auto fits = [&](uint64_t bits, unsigned long n) {
            return Rat(static_cast<unsigned long>(bits)) <=
                   Rat(3, 2) * k * Rat(static_cast<unsigned long>(n * n + n * 4));
        };
        bool ok = fits(b8, 8) && fits(b12, 12);
        os << "subset-sum bits " << b4 << "/" << b8 << "/" << b12
           << " at n=4/8/12 (K from n=4, slack 3/2)";

        // lattice side: double the ambient dimension m with the same content
        // (every coordinate row repeated once, threshold rescaled).  All Gram
        // numbers exactly double, so each stored residue may move by at most
        // two bits; the input doubles while the output stays put.  Comparing
        // two independently random instances instead would only measure sign
        // noise: a negative form number is stored as the canonical residue
        // q - |v| of ~log q bits, so the sign pattern dominates the size.
        Rng rng = root.derive("cvp");
        const size_t n = 3;
        lat::GapCvpInstance small = plant_cvp_yes(
            rng, lat::Basis::make(random_basis_cols(rng, n, 4, 8)), 2);
        lat::GapCvpInstance big = small;
        for (auto& col : big.basis.cols) {
            const VecQ once = col;
            col.insert(col.end(), once.begin(), once.end());
        }
        const VecQ target_once = big.target;
        big.target.insert(big.target.end(), target_once.begin(),
                          target_once.end());
        big.d = small.d * 2; // squared distances double; 2d keeps the promise
        const unsigned long alpha = std::max(
            lat::alpha_param(n, 4, io::payload_bits(small)),
            lat::alpha_param(n, 8, io::payload_bits(big)));
        lat::PipelineParams params;
        params.seed = Rng(seed).derive("size-pin").seed();
        params.alpha_override = alpha;
        auto ca = compress::compress_cvp(small, params);
        auto cb = compress::compress_cvp(big, params);
        ok = ok && ca.out.q == cb.out.q &&
             ca.out.form.entries.size() == cb.out.form.entries.size();
        uint64_t per_entry = 0;
        for (size_t i = 0; i < ca.out.form.entries.size() && ok; ++i) {
            const uint64_t ea = num::bit_size(ca.out.form.entries[i]);
            const uint64_t eb = num::bit_size(cb.out.form.entries[i]);
            per_entry = std::max(per_entry, ea > eb ? ea - eb : eb - ea);
        }
        ok = ok && per_entry <= 2;
        const uint64_t bits_a = io::payload_bits(ca.out);
        const uint64_t bits_b = io::payload_bits(cb.out);
        const uint64_t delta = bits_a > bits_b ? bits_a - bits_b : bits_b - bits_a;
        ok = ok && delta <= io::kHeaderChargeBits;
        // absolute cap from the emitted-size bound: (n+1)^2 log(m q^2) + header
        ok = ok && bits_b <= (n + 1) * (n + 1) *
                                 (num::bit_size(cb.out.q) * 2 +
                                  num::bit_size(BigInt(8))) +
                                 512;
        os << "; lattice m=4 vs row-doubled m=8 (input " << io::payload_bits(small)
           << " -> " << io::payload_bits(big) << " bits): compressed " << bits_a
           << " vs " << bits_b << " bits, q pinned, <= " << per_entry
           << " bits per entry, total delta " << delta << " <= "
           << io::kHeaderChargeBits;
        if (!ok)
            res.failures = 1;
    } catch (const Error& e) {
        res.failures = 1;
        note_error(res, e);
    }
    finish(res, timer);
    if (res.note.empty())
        res.note = os.str();
    return res;
}

std::vector<CampaignResult> run_all(uint64_t seed, int trials_override) {
    auto t = [&](int pinned) {
        return trials_override > 0 ? trials_override : pinned;
    };
    // "< 1%" (strict) and ">= 99%" tolerances as failure counts
    auto below_1pct = [](int trials) { return std::max(0, (trials - 1) / 100); };
    auto at_least_99 = [](int trials) { return trials / 100; };

    std::vector<CampaignResult> rs;
    rs.push_back(subsetsum_completeness(t(200), seed));
    rs.push_back(subsetsum_soundness(t(200), seed, std::nullopt, 0));
    rs.push_back(subsetsum_soundness(t(200), seed, 16, below_1pct(t(200))));
    rs.push_back(mvp_identity(t(1000), seed));
    rs.push_back(lll_contracts(t(100), seed));
    rs.push_back(babai_contracts(t(100), seed));
    rs.push_back(coeff_bounds(t(100), seed));
    rs.push_back(cvp_pipeline(t(100), t(100), 2, std::nullopt, 0, seed));
    rs.push_back(cvp_pipeline(0, t(100), 2, 1, at_least_99(t(100)), seed));
    rs.push_back(cvp_pipeline(t(100), t(100), 4, std::nullopt, 0, seed));
    rs.push_back(cvp_pipeline(0, t(100), 4, 1, at_least_99(t(100)), seed));
    rs.push_back(svp_or(t(100), seed));
    rs.push_back(amplify_bounds(t(50), seed));
    rs.push_back(size_scaling(seed));
    return rs;
}

std::string report_line(const CampaignResult& r) {
    std::ostringstream os;
    os << r.name << ": " << (r.pass ? "pass" : "FAIL") << " trials="
       << r.trials << " failures=" << r.failures << " (" << fmt2(r.seconds)
       << "s)";
    if (!r.note.empty())
        os << " -- " << r.note;
    return os.str();
}

} // namespace latcomp::verify
