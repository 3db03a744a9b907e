#include "hwcl/schatten.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "hwcl/errors.hpp"
#include "hwcl/random.hpp"

namespace hwcl {

SchattenExponent::SchattenExponent(double value) : p(value) {
    if (std::isnan(p) || p < 1.0)
        throw std::invalid_argument("SchattenExponent: need p >= 1");
}

SchattenExponent SchattenExponent::infinity() {
    return SchattenExponent(std::numeric_limits<double>::infinity());
}

bool SchattenExponent::is_infinite() const { return std::isinf(p); }

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a) {
    return Eigen::BDCSVD<Eigen::MatrixXcd>(a).singularValues();
}

double schatten_norm(const Eigen::MatrixXcd& a, SchattenExponent r) {
    if (a.size() == 0) return 0.0;
    const Eigen::VectorXd sv = singular_values(a);
    if (r.is_infinite()) return sv.size() > 0 ? sv(0) : 0.0;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) sum += std::pow(sv(i), r.p);
    return std::pow(sum, 1.0 / r.p);
}

double hoelder_margin(const Eigen::MatrixXcd& b, const Eigen::MatrixXcd& c,
                      SchattenExponent r, SchattenExponent s, SchattenExponent t) {
    if (r.reciprocal() > s.reciprocal() + t.reciprocal() + 1e-12)
        throw std::invalid_argument("hoelder_margin: need 1/r <= 1/s + 1/t");
    if (b.cols() != c.rows())
        throw std::invalid_argument("hoelder_margin: inner dimensions do not match");
    return schatten_norm(b, s) * schatten_norm(c, t) - schatten_norm(b * c, r);
}

SchattenExponent q_exponent(double p) {
    if (p < 1.0) throw std::invalid_argument("q_exponent: need p >= 1");
    if (p <= 2.0) return SchattenExponent::infinity();
    if (std::isinf(p)) return SchattenExponent(2.0);
    return SchattenExponent(2.0 * p / (p - 2.0));
}

namespace {

WeightedTailReport accumulate_tail(const std::function<double(long long)>& column_norm,
                                   const std::function<std::complex<double>(long long)>& a,
                                   long long horizon) {
    if (horizon < 2) throw std::invalid_argument("weighted_tail: horizon too small");
    WeightedTailReport report;
    const long long half = horizon / 2;
    double s = 0.0, s_half = 0.0;
    long long next_sample = 1;
    for (long long n = 1; n <= horizon; ++n) {
        const double col = column_norm(n);
        s += std::norm(a(n)) * col * col;
        if (n == half) s_half = s;
        if (n == next_sample || n == horizon) {
            report.partials.emplace_back(n, s);
            next_sample *= 2;
        }
    }
    report.total = s;
    report.cauchy_tail = s - s_half;
    return report;
}

} // namespace

WeightedTailReport weighted_tail(const DiagonalElement& g,
                                 const std::function<std::complex<double>(long long)>& a,
                                 long long horizon) {
    return accumulate_tail(
        [&g](long long n) { return std::abs(g.u(n) - std::complex<double>(1.0, 0.0)); }, a,
        horizon);
}

WeightedTailReport weighted_tail(const Eigen::MatrixXcd& g,
                                 const std::function<std::complex<double>(long long)>& a,
                                 long long horizon) {
    const Eigen::MatrixXcd diff = g - Eigen::MatrixXcd::Identity(g.rows(), g.cols());
    return accumulate_tail(
        [&diff](long long n) {
            return n <= diff.cols() ? diff.col(n - 1).norm() : 0.0;
        },
        a, horizon);
}

UpSample random_up_element(int n, double p, double decay, std::uint64_t seed) {
    if (n < 1 || n > 256) throw std::invalid_argument("random_up_element: need 1 <= n <= 256");
    if (p < 1.0) throw std::invalid_argument("random_up_element: need p >= 1");
    if (!(decay > 0.0)) throw std::invalid_argument("random_up_element: need decay > 0");

    RandomState rng(seed);
    const Eigen::MatrixXcd v = rng.haar_unitary(n);
    Eigen::VectorXcd phases(n);
    for (int j = 1; j <= n; ++j) {
        const double theta = std::pow(static_cast<double>(j + 1), -decay);
        phases(j - 1) = std::complex<double>(std::cos(theta), std::sin(theta));
    }
    UpSample sample;
    sample.g = v * phases.asDiagonal() * v.adjoint();
    sample.distance_norm =
        schatten_norm(sample.g - Eigen::MatrixXcd::Identity(n, n), SchattenExponent(p));
    return sample;
}

} // namespace hwcl
