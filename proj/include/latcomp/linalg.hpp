#pragma once

#include <optional>
#include <vector>

#include "latcomp/num.hpp"

namespace latcomp::lin {

using num::BigInt;
using num::Rat;

using VecQ = std::vector<Rat>;
using VecZ = std::vector<BigInt>;
using ColsQ = std::vector<VecQ>; // a matrix as a bag of columns
using ColsZ = std::vector<VecZ>;

Rat dot(const VecQ& a, const VecQ& b);
BigInt dot(const VecZ& a, const VecZ& b);

VecQ add(const VecQ& a, const VecQ& b);
VecQ sub(const VecQ& a, const VecQ& b);
VecZ sub(const VecZ& a, const VecZ& b);
void submul(VecQ& a, const Rat& c, const VecQ& b); // a -= c * b
void submul(VecZ& a, const BigInt& c, const VecZ& b);

Rat norm2_sq(const VecQ& v);
// sum_i |v_i|^p for even p (so just v_i^p).
Rat norm_pow(const VecQ& v, unsigned p);
BigInt norm_pow(const VecZ& v, unsigned p);

bool is_zero(const VecQ& v);
bool is_zero(const VecZ& v);

VecQ to_rat(const VecZ& v);
ColsQ to_rat(const ColsZ& cols);
// DomainError unless every entry is an integer.
VecZ to_int(const VecQ& v);
ColsZ to_int(const ColsQ& cols);

// B * z for column bags.
VecQ mul(const ColsQ& cols, const VecZ& z);
VecZ mul(const ColsZ& cols, const VecZ& z);

// Rank by exact Gaussian elimination.
size_t rank(const ColsQ& cols);

// Solve cols * x = b exactly; nullopt when b is outside the column span.
// Requires linearly independent columns.
std::optional<VecQ> solve(const ColsQ& cols, const VecQ& b);

} // namespace latcomp::lin
