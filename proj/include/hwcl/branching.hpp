#pragma once

#include <vector>

namespace hwcl {

// Integer tuple for branching work; entries may have either sign.
// All predicates below sort their arguments descending first, so they only
// depend on the multiset of entries.
using Tuple = std::vector<long long>;

Tuple sorted_desc(Tuple t);

// lambda_1 >= eta_1 >= lambda_2 >= ... >= eta_n >= lambda_{n+1} after
// sorting both descending. Requires len(eta) + 1 == len(lam).
bool interlaces(const Tuple& eta, const Tuple& lam);

// All tuples of length len(lam)-1 interlacing lam, each once, in
// lexicographically descending order (entries sorted descending).
std::vector<Tuple> branch(const Tuple& lam);

// prod_i (lambda_i - lambda_{i+1} + 1) on the sorted tuple; equals
// branch(lam).size(). Throws std::overflow_error beyond 64 bits.
unsigned long long branch_count(const Tuple& lam);

// Number of interlacing chains from lam down to the zero tuple of length n,
// i.e. the dimension of the U(n)-fixed subspace of the highest weight
// representation labeled by lam. Requires 1 <= n <= len(lam).
unsigned long long fixed_space_dim(const Tuple& lam, int n);

// #{j : lambda_j >= 0} >= n and #{j : lambda_j <= 0} >= n
bool has_fixed_vector(const Tuple& lam, int n);

} // namespace hwcl
