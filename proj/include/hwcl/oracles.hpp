#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hwcl/branching.hpp"
#include "hwcl/weights.hpp"

namespace hwcl {

// Torus element diag(x_1, ..., x_n); coordinates must be pairwise distinct
// for alternant evaluation.
using EvalPoint = std::vector<std::complex<double>>;

// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i), exact integer
// arithmetic on the sorted tuple. Throws std::overflow_error beyond
// 64 bits.
long long weyl_dim(const Tuple& lam);

// Bialternant character value det(x_i^{lambda_j + n - j}) / det(x_i^{n-j}).
// Negative entries go through the determinant twist
// chi_lambda(x) = (prod x_i)^{lambda_n} * s_{lambda - lambda_n}(x).
std::complex<double> schur_eval(const Tuple& lam, const EvalPoint& x);

// chi_lambda(x_1,...,x_n,1) == sum over branch(lambda) of chi_eta(x) at
// `trials` seeded unit-circle points, relative error 1e-9.
bool branching_identity_check(const Tuple& lam, int trials, std::uint64_t seed);

// Semistandard tableaux of the given shape with entries in 1..max_entry
// (rows weakly increasing, columns strictly increasing).
long long ssyt_count(const Partition& shape, int max_entry);

} // namespace hwcl
