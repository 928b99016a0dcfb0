#include "latcomp/linalg.hpp"

namespace latcomp::lin {

namespace {

void check_same_size(size_t a, size_t b, const char* what) {
    if (a != b)
        throw DomainError(std::string("dimension mismatch in ") + what);
}

} // namespace

Rat dot(const VecQ& a, const VecQ& b) {
    check_same_size(a.size(), b.size(), "dot");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

BigInt dot(const VecZ& a, const VecZ& b) {
    check_same_size(a.size(), b.size(), "dot");
    BigInt s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

VecQ add(const VecQ& a, const VecQ& b) {
    check_same_size(a.size(), b.size(), "add");
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

VecQ sub(const VecQ& a, const VecQ& b) {
    check_same_size(a.size(), b.size(), "sub");
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

VecZ sub(const VecZ& a, const VecZ& b) {
    check_same_size(a.size(), b.size(), "sub");
    VecZ r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

void submul(VecQ& a, const Rat& c, const VecQ& b) {
    check_same_size(a.size(), b.size(), "submul");
    for (size_t i = 0; i < a.size(); ++i)
        a[i] -= c * b[i];
}

void submul(VecZ& a, const BigInt& c, const VecZ& b) {
    check_same_size(a.size(), b.size(), "submul");
    for (size_t i = 0; i < a.size(); ++i)
        mpz_submul(a[i].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
}

Rat norm2_sq(const VecQ& v) {
    Rat s = 0;
    for (const Rat& x : v)
        s += x * x;
    return s;
}

Rat norm_pow(const VecQ& v, unsigned p) {
    if (p == 0 || p % 2 != 0)
        throw DomainError("norm_pow requires even p >= 2");
    Rat s = 0;
    for (const Rat& x : v) {
        Rat t = 1;
        for (unsigned i = 0; i < p; ++i)
            t *= x;
        s += t;
    }
    return s;
}

BigInt norm_pow(const VecZ& v, unsigned p) {
    if (p == 0 || p % 2 != 0)
        throw DomainError("norm_pow requires even p >= 2");
    BigInt s = 0;
    BigInt t;
    for (const BigInt& x : v) {
        mpz_pow_ui(t.get_mpz_t(), x.get_mpz_t(), p);
        s += t;
    }
    return s;
}

bool is_zero(const VecQ& v) {
    for (const Rat& x : v)
        if (x != 0)
            return false;
    return true;
}

bool is_zero(const VecZ& v) {
    for (const BigInt& x : v)
        if (x != 0)
            return false;
    return true;
}

VecQ to_rat(const VecZ& v) {
    VecQ r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = Rat(v[i]);
    return r;
}

ColsQ to_rat(const ColsZ& cols) {
    ColsQ r(cols.size());
    for (size_t i = 0; i < cols.size(); ++i)
        r[i] = to_rat(cols[i]);
    return r;
}

VecZ to_int(const VecQ& v) {
    VecZ r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1)
            throw DomainError("to_int: entry " + num::to_string(v[i]) +
                              " is not an integer");
        r[i] = v[i].get_num();
    }
    return r;
}

ColsZ to_int(const ColsQ& cols) {
    ColsZ r(cols.size());
    for (size_t i = 0; i < cols.size(); ++i)
        r[i] = to_int(cols[i]);
    return r;
}

VecQ mul(const ColsQ& cols, const VecZ& z) {
    if (cols.empty())
        throw DomainError("mul: empty matrix");
    check_same_size(cols.size(), z.size(), "mul");
    VecQ r(cols[0].size(), Rat(0));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < r.size(); ++i)
            r[i] += Rat(z[j]) * cols[j][i];
    return r;
}

VecZ mul(const ColsZ& cols, const VecZ& z) {
    if (cols.empty())
        throw DomainError("mul: empty matrix");
    check_same_size(cols.size(), z.size(), "mul");
    VecZ r(cols[0].size(), BigInt(0));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < r.size(); ++i)
            mpz_addmul(r[i].get_mpz_t(), z[j].get_mpz_t(), cols[j][i].get_mpz_t());
    return r;
}

namespace {

// Row-reduce the given row-major matrix in place; returns pivot columns.
std::vector<size_t> eliminate(std::vector<VecQ>& rows) {
    std::vector<size_t> pivots;
    const size_t ncols = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        Rat inv = rows[r][c];
        for (size_t j = c; j < ncols; ++j)
            rows[r][j] /= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Rat f = rows[i][c];
            for (size_t j = c; j < ncols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

size_t rank(const ColsQ& cols) {
    if (cols.empty())
        return 0;
    const size_t m = cols[0].size();
    std::vector<VecQ> rows(m, VecQ(cols.size(), Rat(0)));
    for (size_t j = 0; j < cols.size(); ++j) {
        check_same_size(cols[j].size(), m, "rank");
        for (size_t i = 0; i < m; ++i)
            rows[i][j] = cols[j][i];
    }
    return eliminate(rows).size();
}

std::optional<VecQ> solve(const ColsQ& cols, const VecQ& b) {
    if (cols.empty())
        throw DomainError("solve: empty matrix");
    const size_t m = cols[0].size();
    const size_t n = cols.size();
    check_same_size(b.size(), m, "solve");
    std::vector<VecQ> rows(m, VecQ(n + 1, Rat(0)));
    for (size_t j = 0; j < n; ++j) {
        check_same_size(cols[j].size(), m, "solve");
        for (size_t i = 0; i < m; ++i)
            rows[i][j] = cols[j][i];
    }
    for (size_t i = 0; i < m; ++i)
        rows[i][n] = b[i];
    std::vector<size_t> pivots = eliminate(rows);
    // Inconsistent iff the augmented column became a pivot.
    for (size_t p : pivots)
        if (p == n)
            return std::nullopt;
    if (pivots.size() != n)
        throw RankError("solve: columns are linearly dependent");
    VecQ x(n, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = rows[r][n];
    return x;
}

} // namespace latcomp::lin
