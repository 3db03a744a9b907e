#include "hwcl/branching.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <stdexcept>

namespace hwcl {

Tuple sorted_desc(Tuple t) {
    std::sort(t.begin(), t.end(), std::greater<>());
    return t;
}

bool interlaces(const Tuple& eta, const Tuple& lam) {
    if (eta.size() + 1 != lam.size())
        throw std::invalid_argument("interlaces: len(eta) + 1 must equal len(lam)");
    const Tuple e = sorted_desc(eta);
    const Tuple l = sorted_desc(lam);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (l[i] < e[i] || e[i] < l[i + 1]) return false;
    return true;
}

std::vector<Tuple> branch(const Tuple& lam) {
    if (lam.empty())
        throw std::invalid_argument("branch: tuple must be nonempty");
    const Tuple l = sorted_desc(lam);
    const std::size_t n = l.size() - 1;
    std::vector<Tuple> out;
    if (n == 0) {
        out.push_back(Tuple{});
        return out;
    }
    // eta_i ranges over [l_{i+1}, l_i] independently; start at the maximum
    // of every slot and run the odometer downward for lex-descending order.
    Tuple eta(l.begin(), l.begin() + n);
    while (true) {
        out.push_back(eta);
        std::size_t i = n;
        while (i > 0 && eta[i - 1] == l[i]) --i;
        if (i == 0) break;
        --eta[i - 1];
        for (std::size_t j = i; j < n; ++j) eta[j] = l[j];
    }
    return out;
}

unsigned long long branch_count(const Tuple& lam) {
    if (lam.empty())
        throw std::invalid_argument("branch_count: tuple must be nonempty");
    const Tuple l = sorted_desc(lam);
    unsigned long long count = 1;
    for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        const auto gap = static_cast<unsigned long long>(l[i] - l[i + 1]) + 1;
        if (count > ULLONG_MAX / gap)
            throw std::overflow_error("branch_count: exceeds 64-bit range");
        count *= gap;
    }
    return count;
}

namespace {

unsigned long long checked_add(unsigned long long a, unsigned long long b) {
    unsigned long long s = 0;
    if (__builtin_add_overflow(a, b, &s))
        throw std::overflow_error("fixed_space_dim: exceeds 64-bit range");
    return s;
}

unsigned long long count_chains(const Tuple& t, std::size_t n,
                                std::map<Tuple, unsigned long long>& memo) {
    if (t.size() == n) {
        for (long long v : t)
            if (v != 0) return 0;
        return 1;
    }
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    unsigned long long total = 0;
    for (const Tuple& eta : branch(t))
        total = checked_add(total, count_chains(eta, n, memo));
    memo.emplace(t, total);
    return total;
}

} // namespace

unsigned long long fixed_space_dim(const Tuple& lam, int n) {
    if (n < 1 || static_cast<std::size_t>(n) > lam.size())
        throw std::invalid_argument("fixed_space_dim: need 1 <= n <= len(lam)");
    std::map<Tuple, unsigned long long> memo; // per-call cache
    return count_chains(sorted_desc(lam), static_cast<std::size_t>(n), memo);
}

bool has_fixed_vector(const Tuple& lam, int n) {
    if (n < 1 || static_cast<std::size_t>(n) > lam.size())
        throw std::invalid_argument("has_fixed_vector: need 1 <= n <= len(lam)");
    long long nonneg = 0, nonpos = 0;
    for (long long v : lam) {
        if (v >= 0) ++nonneg;
        if (v <= 0) ++nonpos;
    }
    return nonneg >= n && nonpos >= n;
}

} // namespace hwcl
