#include "latcomp/lattice.hpp"

namespace latcomp::lat {

Basis Basis::make(ColsQ cols) {
    if (cols.empty())
        throw DomainError("basis needs at least one column");
    const size_t m = cols[0].size();
    const size_t n = cols.size();
    if (m == 0)
        throw DomainError("basis columns must be non-empty");
    for (const VecQ& c : cols)
        if (c.size() != m)
            throw DomainError("basis columns have inconsistent dimensions");
    if (m < n)
        throw DomainError("basis has more columns than rows");
    if (lin::rank(cols) != n)
        throw RankError("basis columns are linearly dependent");
    Basis b;
    b.cols = std::move(cols);
    return b;
}

void validate(const GapCvpInstance& inst) {
    if (inst.target.size() != inst.basis.dim_m())
        throw DomainError("target dimension does not match the basis");
    if (inst.d <= 0)
        throw DomainError("threshold d must be positive");
    if (inst.gamma < 1)
        throw DomainError("gamma must be >= 1");
    if (inst.p < 2 || inst.p % 2 != 0)
        throw DomainError("p must be even and >= 2");
    if (inst.promise_tau && *inst.promise_tau <= 0)
        throw DomainError("promise tau must be positive");
}

void validate(const GapSvpInstance& inst) {
    if (inst.d <= 0)
        throw DomainError("threshold d must be positive");
    if (inst.gamma < 1)
        throw DomainError("gamma must be >= 1");
    if (inst.p < 2 || inst.p % 2 != 0)
        throw DomainError("p must be even and >= 2");
}

void validate(const ModSubsetSumInstance& inst) {
    if (inst.modulus < 2)
        throw DomainError("modulus must be >= 2");
    auto in_range = [&](const BigInt& v) { return v >= 0 && v < inst.modulus; };
    for (const BigInt& r : inst.residues)
        if (!in_range(r))
            throw DomainError("residue outside [0, modulus)");
    if (!in_range(inst.target))
        throw DomainError("target residue outside [0, modulus)");
}

// ---- forms ----

IpForm ip_form(const ColsZ& cols, const VecZ& target) {
    const size_t n = cols.size();
    IpForm f;
    f.n = n;
    f.gram.reserve(n * (n + 1) / 2);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j)
            f.gram.push_back(lin::dot(cols[i], cols[j]));
    f.beta.reserve(n);
    for (size_t i = 0; i < n; ++i)
        f.beta.push_back(lin::dot(cols[i], target));
    f.beta_t = lin::dot(target, target);
    return f;
}

BigInt eval_dist_sq(const IpForm& f, const VecZ& z) {
    if (z.size() != f.n)
        throw DomainError("coefficient vector does not match the form");
    BigInt s = f.beta_t;
    for (size_t i = 0; i < f.n; ++i) {
        const BigInt& gii = f.gram[i * (i + 1) / 2 + i];
        s += z[i] * z[i] * gii;
        for (size_t j = 0; j < i; ++j)
            s += 2 * z[i] * z[j] * f.gram[i * (i + 1) / 2 + j];
        s -= 2 * z[i] * f.beta[i];
    }
    return s;
}

BigInt eval_dist_sq_mod(const IpForm& f, const VecZ& z, const BigInt& q) {
    if (q < 2)
        throw DomainError("modulus must be >= 2");
    BigInt v = eval_dist_sq(f, z);
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
    return r;
}

BigInt mvp(const std::vector<const VecZ*>& vs) {
    if (vs.empty())
        throw DomainError("mvp of zero vectors");
    const size_t m = vs[0]->size();
    for (const VecZ* v : vs)
        if (v->size() != m)
            throw DomainError("mvp vectors have inconsistent dimensions");
    BigInt s = 0;
    BigInt t;
    for (size_t c = 0; c < m; ++c) {
        t = (*vs[0])[c];
        for (size_t j = 1; j < vs.size(); ++j)
            t *= (*vs[j])[c];
        s += t;
    }
    return s;
}

std::vector<std::vector<uint32_t>> sorted_multi_indices(size_t alphabet, unsigned p) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur(p, 1);
    if (alphabet == 0 || p == 0)
        return out;
    for (;;) {
        out.push_back(cur);
        // advance to the next non-decreasing tuple
        size_t i = p;
        while (i > 0 && cur[i - 1] == alphabet)
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (size_t j = i; j < p; ++j)
            cur[j] = cur[i - 1];
    }
    return out;
}

size_t multi_index_count(size_t alphabet, unsigned p) {
    // C(alphabet + p - 1, p)
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < p; ++i) {
        num *= BigInt(static_cast<unsigned long>(alphabet + p - 1 - i));
        den *= BigInt(i + 1);
    }
    BigInt c = num / den;
    return static_cast<size_t>(mpz_get_ui(c.get_mpz_t()));
}

MvpForm mvp_form(const ColsZ& cols, const VecZ& target, unsigned p) {
    if (p < 2 || p % 2 != 0)
        throw DomainError("mvp_form requires even p >= 2");
    const size_t n = cols.size();
    std::vector<const VecZ*> columns;
    columns.reserve(n + 1);
    for (const VecZ& c : cols)
        columns.push_back(&c);
    columns.push_back(&target);

    MvpForm f;
    f.n = n;
    f.p = p;
    auto indices = sorted_multi_indices(n + 1, p);
    f.entries.reserve(indices.size());
    std::vector<const VecZ*> tuple(p);
    for (const auto& idx : indices) {
        for (unsigned j = 0; j < p; ++j)
            tuple[j] = columns[idx[j] - 1];
        f.entries.push_back(mvp(tuple));
    }
    return f;
}

namespace {

BigInt factorial(unsigned k) {
    BigInt f = 1;
    for (unsigned i = 2; i <= k; ++i)
        f *= i;
    return f;
}

// Multinomial coefficient p! / prod (run lengths!) of a sorted tuple.
BigInt tuple_multiplicity(const std::vector<uint32_t>& idx, const BigInt& p_fact) {
    BigInt den = 1;
    size_t i = 0;
    while (i < idx.size()) {
        size_t j = i;
        while (j < idx.size() && idx[j] == idx[i])
            ++j;
        den *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return p_fact / den;
}

} // namespace

BigInt eval_dist_pow(const MvpForm& f, const VecZ& z) {
    if (z.size() != f.n)
        throw DomainError("coefficient vector does not match the form");
    auto indices = sorted_multi_indices(f.n + 1, f.p);
    if (indices.size() != f.entries.size())
        throw DomainError("form has the wrong number of entries");
    // extended coefficients: a_i = z_i for columns, a_{n+1} = -1 for the target
    VecZ a = z;
    a.push_back(BigInt(-1));
    const BigInt p_fact = factorial(f.p);
    BigInt s = 0;
    for (size_t e = 0; e < indices.size(); ++e) {
        const auto& idx = indices[e];
        BigInt term = tuple_multiplicity(idx, p_fact);
        for (uint32_t i : idx)
            term *= a[i - 1];
        term *= f.entries[e];
        s += term;
    }
    return s;
}

BigInt eval_dist_pow_mod(const MvpForm& f, const VecZ& z, const BigInt& q) {
    if (q < 2)
        throw DomainError("modulus must be >= 2");
    BigInt v = eval_dist_pow(f, z);
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
    return r;
}

void validate(const RqCompressed& inst) {
    if (inst.q < 2)
        throw DomainError("compressed modulus must be >= 2");
    if (inst.r < 1)
        throw DomainError("compressed box radius must be >= 1");
    if (inst.dpp < -1)
        throw DomainError("compressed threshold must be >= -1");
    if (inst.form.p < 2 || inst.form.p % 2 != 0)
        throw DomainError("p must be even and >= 2");
    if (inst.form.entries.size() != multi_index_count(inst.form.n + 1, inst.form.p))
        throw DomainError("compressed entry list has the wrong length");
    for (const BigInt& e : inst.form.entries)
        if (e < 0 || e >= inst.q)
            throw DomainError("compressed entry outside [0, q)");
}

// ---- scaling ----

namespace {

BigInt lcm_of_denominators(const Basis& basis, const VecQ* target) {
    BigInt l = 1;
    auto absorb = [&l](const Rat& x) {
        BigInt d = x.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    };
    for (const VecQ& c : basis.cols)
        for (const Rat& x : c)
            absorb(x);
    if (target)
        for (const Rat& x : *target)
            absorb(x);
    return l;
}

VecZ scale_vec(const VecQ& v, const BigInt& scaler) {
    VecZ r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(scaler);
        if (s.get_den() != 1)
            throw DomainError("scaler is not a common denominator multiple");
        r[i] = s.get_num();
    }
    return r;
}

} // namespace

ScaledCvp scale_to_integers(const Basis& basis, const VecQ& target) {
    ScaledCvp out;
    out.scaler = lcm_of_denominators(basis, &target);
    out.cols.reserve(basis.cols.size());
    for (const VecQ& c : basis.cols)
        out.cols.push_back(scale_vec(c, out.scaler));
    out.target = scale_vec(target, out.scaler);
    return out;
}

ScaledBasis scale_to_integers(const Basis& basis) {
    ScaledBasis out;
    out.scaler = lcm_of_denominators(basis, nullptr);
    out.cols.reserve(basis.cols.size());
    for (const VecQ& c : basis.cols)
        out.cols.push_back(scale_vec(c, out.scaler));
    return out;
}

unsigned long alpha_param(size_t n, size_t m, unsigned long eta) {
    BigInt x(static_cast<unsigned long>(n + m) + eta);
    return num::ceil_log2_squared(x);
}

} // namespace latcomp::lat
