#include "hwcl/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hwcl {

double RandomState::uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RandomState::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double RandomState::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

std::complex<double> RandomState::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
}

long long RandomState::uniform_int(long long lo, long long hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return lo + static_cast<long long>(x % span);
}

Eigen::MatrixXcd RandomState::haar_unitary(int n) {
    if (n < 1) throw std::invalid_argument("haar_unitary: n must be positive");
    Eigen::MatrixXcd z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z(i, j) = complex_normal();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        std::complex<double> d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= (a > 0.0) ? d / a : 1.0;
    }
    return q;
}

std::vector<std::complex<double>> RandomState::distinct_unit_circle(int n, double min_gap) {
    std::vector<double> angles;
    angles.reserve(n);
    int guard = 0;
    while (static_cast<int>(angles.size()) < n) {
        if (++guard > 100000)
            throw std::runtime_error("distinct_unit_circle: cannot place distinct angles");
        const double a = uniform(min_gap, 2.0 * std::numbers::pi - min_gap);
        bool ok = true;
        for (double b : angles)
            if (std::abs(a - b) < min_gap) { ok = false; break; }
        if (ok) angles.push_back(a);
    }
    std::vector<std::complex<double>> pts;
    pts.reserve(n);
    for (double a : angles) pts.emplace_back(std::cos(a), std::sin(a));
    return pts;
}

} // namespace hwcl
