#include "hwcl/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "hwcl/errors.hpp"
#include "hwcl/random.hpp"

namespace hwcl {

namespace {

using int128 = __int128;

int128 igcd(int128 a, int128 b) {
    while (b != 0) {
        const int128 t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

std::complex<double> pow_int(std::complex<double> x, long long e) {
    if (e < 0) return 1.0 / pow_int(x, -e);
    std::complex<double> acc = 1.0;
    while (e > 0) {
        if (e & 1) acc *= x;
        x *= x;
        e >>= 1;
    }
    return acc;
}

void require_distinct(const EvalPoint& x) {
    double scale = 1.0;
    for (const auto& xi : x) scale = std::max(scale, std::abs(xi));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (std::abs(x[i] - x[j]) <= 1e-12 * scale)
                throw numeric_error("schur_eval: coincident evaluation points");
}

} // namespace

long long weyl_dim(const Tuple& lam) {
    const Tuple l = sorted_desc(lam);
    const std::size_t n = l.size();
    int128 num = 1, den = 1;
    constexpr int128 cap = (int128{1} << 120);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int128 top = l[i] - l[j] + static_cast<long long>(j - i);
            const int128 bot = static_cast<long long>(j - i);
            if (num > cap / top || den > cap / bot)
                throw std::overflow_error("weyl_dim: intermediate product overflow");
            num *= top;
            den *= bot;
            const int128 g = igcd(num, den);
            num /= g;
            den /= g;
        }
    }
    // den divides num for every weakly decreasing tuple
    const int128 result = num / den;
    if (result > std::numeric_limits<long long>::max())
        throw std::overflow_error("weyl_dim: result exceeds 64-bit range");
    return static_cast<long long>(result);
}

std::complex<double> schur_eval(const Tuple& lam, const EvalPoint& x) {
    const std::size_t n = x.size();
    if (lam.size() != n)
        throw std::invalid_argument("schur_eval: tuple length must match point size");
    require_distinct(x);
    if (n == 0) return 1.0;

    const Tuple l = sorted_desc(lam);
    const long long twist = l.back();
    if (twist < 0)
        for (const auto& xi : x)
            if (std::abs(xi) < 1e-12)
                throw numeric_error("schur_eval: negative weight entry needs nonzero coordinates");

    Eigen::MatrixXcd a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long long e = (l[j] - twist) + static_cast<long long>(n - 1 - j);
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = pow_int(x[i], e);
        }
    const std::complex<double> numer = Eigen::PartialPivLU<Eigen::MatrixXcd>(a).determinant();

    std::complex<double> vandermonde = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) vandermonde *= (x[i] - x[j]);

    std::complex<double> det_factor = 1.0;
    for (const auto& xi : x) det_factor *= xi;

    return pow_int(det_factor, twist) * numer / vandermonde;
}

bool branching_identity_check(const Tuple& lam, int trials, std::uint64_t seed) {
    if (lam.size() < 2)
        throw std::invalid_argument("branching_identity_check: need len(lam) >= 2");
    const std::vector<Tuple> etas = branch(lam);
    RandomState rng(seed);
    const int m = static_cast<int>(lam.size()) - 1;
    for (int t = 0; t < trials; ++t) {
        EvalPoint x = rng.distinct_unit_circle(m);
        EvalPoint extended = x;
        extended.emplace_back(1.0, 0.0);
        const std::complex<double> lhs = schur_eval(lam, extended);
        std::complex<double> rhs = 0.0;
        for (const Tuple& eta : etas) rhs += schur_eval(eta, x);
        const double mag = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) > 1e-9 * mag) return false;
    }
    return true;
}

namespace {

long long ssyt_fill(const Partition& shape, int max_entry,
                    std::vector<std::vector<int>>& fill, std::size_t r, std::size_t c) {
    if (r == shape.length()) return 1;
    const std::size_t next_r = (c + 1 < static_cast<std::size_t>(shape.part(r))) ? r : r + 1;
    const std::size_t next_c = (next_r == r) ? c + 1 : 0;
    const int lo_row = (c > 0) ? fill[r][c - 1] : 1;                      // weakly increasing
    const int lo_col = (r > 0 && c < fill[r - 1].size()) ? fill[r - 1][c] + 1 : 1; // strictly
    long long total = 0;
    for (int v = std::max(lo_row, lo_col); v <= max_entry; ++v) {
        fill[r][c] = v;
        total += ssyt_fill(shape, max_entry, fill, next_r, next_c);
    }
    return total;
}

} // namespace

long long ssyt_count(const Partition& shape, int max_entry) {
    if (max_entry < 0) throw std::invalid_argument("ssyt_count: max_entry must be >= 0");
    if (shape.empty()) return 1;
    if (max_entry == 0) return 0;
    std::vector<std::vector<int>> fill;
    for (std::size_t r = 0; r < shape.length(); ++r)
        fill.emplace_back(static_cast<std::size_t>(shape.part(r)), 0);
    return ssyt_fill(shape, max_entry, fill, 0, 0);
}

} // namespace hwcl
