#include "latcomp/reduction.hpp"

namespace latcomp::reduce {

Gso gso(const ColsQ& cols) {
    const size_t n = cols.size();
    Gso g;
    g.bstar.resize(n);
    g.mu.resize(n);
    g.bstar_sq.resize(n);
    for (size_t i = 0; i < n; ++i) {
        g.bstar[i] = cols[i];
        g.mu[i].resize(i);
        for (size_t j = 0; j < i; ++j) {
            g.mu[i][j] = lin::dot(cols[i], g.bstar[j]) / g.bstar_sq[j];
            lin::submul(g.bstar[i], g.mu[i][j], g.bstar[j]);
        }
        g.bstar_sq[i] = lin::norm2_sq(g.bstar[i]);
        if (g.bstar_sq[i] == 0)
            throw RankError("gso: columns are linearly dependent");
    }
    return g;
}

namespace {

ColsZ identity_transform(size_t n) {
    ColsZ u(n, VecZ(n, BigInt(0)));
    for (size_t i = 0; i < n; ++i)
        u[i][i] = 1;
    return u;
}

} // namespace

LllResult lll_reduce_ex(ColsQ cols) {
    const size_t n = cols.size();
    ColsZ u = identity_transform(n);
    if (n == 0)
        throw DomainError("lll: empty basis");
    Gso g = gso(cols);
    const Rat delta(3, 4);
    size_t k = 1;
    while (k < n) {
        for (size_t jj = k; jj > 0; --jj) {
            const size_t j = jj - 1;
            BigInt r = num::round_nearest(g.mu[k][j]);
            if (r != 0) {
                Rat rq(r);
                lin::submul(cols[k], rq, cols[j]);
                lin::submul(u[k], r, u[j]);
                for (size_t j2 = 0; j2 < j; ++j2)
                    g.mu[k][j2] -= rq * g.mu[j][j2];
                g.mu[k][j] -= rq;
            }
        }
        if (g.bstar_sq[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.bstar_sq[k - 1]) {
            ++k;
        } else {
            std::swap(cols[k], cols[k - 1]);
            std::swap(u[k], u[k - 1]);
            g = gso(cols);
            k = (k > 1) ? k - 1 : 1;
        }
    }
    return LllResult{std::move(cols), std::move(u)};
}

ColsQ lll_reduce(ColsQ cols) { return lll_reduce_ex(std::move(cols)).cols; }

LllConditions check_lll_conditions(const ColsQ& cols) {
    Gso g = gso(cols);
    LllConditions c;
    c.size_reduced = true;
    c.successive_norms = true;
    const Rat half(1, 2);
    for (size_t i = 0; i < cols.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (g.mu[i][j] > half || g.mu[i][j] < -half)
                c.size_reduced = false;
        if (i > 0 && g.bstar_sq[i] < g.bstar_sq[i - 1] * half)
            c.successive_norms = false;
    }
    return c;
}

BabaiResult babai_shift(const ColsQ& cols, const VecQ& target) {
    const size_t n = cols.size();
    if (n == 0)
        throw DomainError("babai: empty basis");
    if (target.size() != cols[0].size())
        throw DomainError("babai: target dimension mismatch");
    Gso g = gso(cols);
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i)
        x[i] = lin::dot(target, g.bstar[i]) / g.bstar_sq[i];
    BabaiResult res;
    res.w.assign(n, BigInt(0));
    res.residuals.assign(n, Rat(0));
    for (size_t ii = n; ii > 0; --ii) {
        const size_t i = ii - 1;
        Rat y = x[i];
        for (size_t k = i + 1; k < n; ++k)
            y -= Rat(res.w[k]) * g.mu[k][i];
        res.w[i] = num::round_nearest(y);
        res.residuals[i] = y - Rat(res.w[i]);
    }
    res.shifted = target;
    for (size_t i = 0; i < n; ++i)
        lin::submul(res.shifted, Rat(res.w[i]), cols[i]);
    return res;
}

Rat babai_distance_sq(const BabaiResult& r) { return lin::norm2_sq(r.shifted); }

Rat svp_length_sq(const Basis& basis) {
    ColsQ reduced = lll_reduce(basis.cols);
    return lin::norm2_sq(reduced[0]);
}

namespace {

CoeffBound bound_coefficients(const Basis& basis, const VecQ& target, BigInt box) {
    LllResult red = lll_reduce_ex(basis.cols);
    BabaiResult bab = babai_shift(red.cols, target);
    CoeffBound out;
    out.cols = std::move(red.cols);
    out.transform = std::move(red.transform);
    out.shifted = std::move(bab.shifted);
    out.w = std::move(bab.w);
    out.box = std::move(box);
    return out;
}

} // namespace

CoeffBound bound_coefficients_l2(const Basis& basis, const VecQ& target) {
    const size_t n = basis.rank_n();
    return bound_coefficients(basis, target, num::pow2z(n * n));
}

CoeffBound bound_coefficients_lp(const Basis& basis, const VecQ& target,
                                 unsigned p, const Rat& tau) {
    if (p < 2 || p % 2 != 0)
        throw DomainError("bound_coefficients_lp requires even p >= 2");
    if (tau <= 0)
        throw DomainError("bound_coefficients_lp requires tau > 0");
    const size_t n = basis.rank_n();
    const size_t m = basis.dim_m();
    // ceil(tau * m * 2^(3n/2)) computed exactly on squares.
    Rat bound_sq = tau * tau * Rat(static_cast<unsigned long>(m * m)) *
                   num::pow2q(static_cast<long>(3 * n));
    return bound_coefficients(basis, target, num::sqrt_ceil_int(bound_sq));
}

ColsZ hnf(const ColsZ& cols) {
    if (cols.empty())
        throw DomainError("hnf: empty matrix");
    ColsZ h = cols;
    const size_t n = h.size();
    const size_t m = h[0].size();
    size_t col = 0;
    for (size_t row = 0; row < m && col < n; ++row) {
        size_t j = col;
        while (j < n && h[j][row] == 0)
            ++j;
        if (j == n)
            continue;
        std::swap(h[col], h[j]);
        for (j = col + 1; j < n; ++j) {
            if (h[j][row] == 0)
                continue;
            const BigInt a = h[col][row];
            const BigInt b = h[j][row];
            BigInt g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(),
                       b.get_mpz_t());
            const BigInt a_g = a / g;
            const BigInt b_g = b / g;
            VecZ nc(m), nj(m);
            for (size_t i = 0; i < m; ++i) {
                nc[i] = u * h[col][i] + v * h[j][i];
                nj[i] = a_g * h[j][i] - b_g * h[col][i];
            }
            h[col] = std::move(nc);
            h[j] = std::move(nj);
        }
        if (h[col][row] < 0)
            for (BigInt& x : h[col])
                x = -x;
        for (size_t k = 0; k < col; ++k) {
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), h[k][row].get_mpz_t(), h[col][row].get_mpz_t());
            if (q != 0)
                lin::submul(h[k], q, h[col]);
        }
        ++col;
    }
    if (col != n)
        throw RankError("hnf: columns are linearly dependent");
    return h;
}

} // namespace latcomp::reduce
