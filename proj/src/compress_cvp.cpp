#include "latcomp/compress_cvp.hpp"

#include <algorithm>

#include "latcomp/io.hpp"

namespace latcomp::compress {

namespace {

// n^e as a machine word, guarded so later 2^(n^e) stays storable.
unsigned long checked_pow(size_t n, unsigned long e, const char* what) {
    BigInt v = num::ipow(BigInt(static_cast<unsigned long>(n)), e);
    if (v > 1'000'000)
        throw GuardError(std::string(what) + ": n^c exceeds the exponent guard");
    return mpz_get_ui(v.get_mpz_t());
}

Rat rat_pow(const Rat& x, unsigned p) {
    Rat r = 1;
    for (unsigned i = 0; i < p; ++i)
        r *= x;
    return r;
}

constexpr unsigned long kMaxPrimeExp = 100'000;

} // namespace

Projection modular_project(ColsZ cols, VecZ target, const BigInt& q) {
    if (q < 2)
        throw DomainError("modular_project requires a modulus >= 2");
    for (auto& col : cols)
        for (auto& v : col)
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
    for (auto& v : target)
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
    return Projection{std::move(cols), std::move(target)};
}

Truncation truncate_bits(ColsZ cols, VecZ target, const Rat& d, size_t n,
                         unsigned long c) {
    if (d <= 0)
        throw DomainError("truncation requires d > 0");
    Truncation tr;
    tr.n_prime = num::floor_log2(d);
    const unsigned long nc = checked_pow(n, c, "truncate_bits");
    const long thr = static_cast<long>(4 * nc);
    if (tr.n_prime > thr) {
        tr.shift = static_cast<unsigned long>(tr.n_prime - thr);
        for (auto& col : cols)
            for (auto& v : col)
                mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), tr.shift);
        for (auto& v : target)
            mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), tr.shift);
        tr.d = (d + num::pow2q(tr.n_prime - static_cast<long>(2 * nc))) *
               num::pow2q(-static_cast<long>(tr.shift));
    } else {
        tr.d = d;
    }
    tr.cols = std::move(cols);
    tr.target = std::move(target);
    return tr;
}

CvpCompression compress_cvp(const lat::GapCvpInstance& inst,
                            const lat::PipelineParams& params) {
    lat::validate(inst);
    const size_t n = inst.basis.rank_n();
    const size_t m = inst.basis.dim_m();
    const unsigned p = inst.p;

    const unsigned long nc1 = checked_pow(n, params.c1, "gamma shape");
    if ((inst.gamma - 1) * num::pow2q(static_cast<long>(nc1)) < 1)
        throw DomainError("gamma below the admissible 1 + 2^(-n^c1) shape");

    CvpCompression res;
    res.c = std::max<unsigned>(params.c1 + 1, p == 2 ? 3 : 2);
    const unsigned long nc = checked_pow(n, res.c, "compress_cvp");

    if (p == 2) {
        res.coeff = reduce::bound_coefficients_l2(inst.basis, inst.target);
    } else {
        const Rat tau_eff =
            inst.promise_tau ? *inst.promise_tau : Rat(1) / (inst.gamma - 1);
        res.coeff = reduce::bound_coefficients_lp(inst.basis, inst.target, p, tau_eff);
    }

    lat::ScaledCvp scaled =
        lat::scale_to_integers(lat::Basis{res.coeff.cols}, res.coeff.shifted);
    res.scaler = scaled.scaler;
    Rat d_scaled = inst.d * Rat(res.scaler);

    Truncation tr = truncate_bits(std::move(scaled.cols), std::move(scaled.target),
                                  d_scaled, n, res.c);
    res.trunc_cols = std::move(tr.cols);
    res.trunc_target = std::move(tr.target);
    res.d_trunc = tr.d;

    BigInt r = p == 2 ? num::pow2z(n * n) : num::pow2z(nc);
    if (res.coeff.box > r)
        throw GuardError("coefficient box exceeds the compressed range");

    BigInt dpp = num::rational_floor(rat_pow(res.d_trunc, p));

    res.eta = io::payload_bits(inst);
    res.alpha = params.alpha_override ? *params.alpha_override
                                      : lat::alpha_param(n, m, res.eta);
    if (params.scaled_s) {
        res.range.lo_exp = 10 * n * *params.scaled_s;
        res.range.hi_exp = 2 * res.range.lo_exp;
    } else {
        const unsigned long e =
            p == 2 ? nc : checked_pow(n, res.c + 1ul, "compress_cvp");
        res.range.lo_exp = 10 * e + res.alpha;
        res.range.hi_exp = 20 * e + res.alpha;
    }
    if (res.range.hi_exp > kMaxPrimeExp || res.range.lo_exp >= res.range.hi_exp)
        throw GuardError("prime range out of sampling reach; use scaled mode");

    num::Rng rng = num::Rng(params.seed).derive("cvp-q");
    num::PrimeSampleOptions opt;
    opt.mr_rounds = params.mr_rounds;
    opt.max_attempts = params.max_prime_attempts;
    BigInt q = num::sample_prime(num::pow2z(res.range.lo_exp),
                                 num::pow2z(res.range.hi_exp), rng, opt);
    if (dpp >= q)
        throw GuardError("threshold exceeds the modulus; raise the scale parameter");

    Projection proj = modular_project(res.trunc_cols, res.trunc_target, q);
    res.proj_cols = std::move(proj.cols);
    res.proj_target = std::move(proj.target);
    lat::MvpForm form = lat::mvp_form(res.proj_cols, res.proj_target, p);
    for (BigInt& e : form.entries)
        mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
    res.out.form = std::move(form);
    res.out.q = std::move(q);
    res.out.r = std::move(r);
    res.out.dpp = std::move(dpp);
    lat::validate(res.out);
    return res;
}

} // namespace latcomp::compress
