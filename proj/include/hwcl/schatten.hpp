#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "hwcl/cocycle.hpp"

namespace hwcl {

// p in [1, infinity]; infinite p selects the operator norm.
struct SchattenExponent {
    double p = 2.0;

    SchattenExponent() = default;
    SchattenExponent(double value); // validates p >= 1 (implicit on purpose)

    static SchattenExponent infinity();
    bool is_infinite() const;
    double reciprocal() const { return is_infinite() ? 0.0 : 1.0 / p; }
};

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a);

// (sum sigma_i^p)^{1/p}, or max sigma_i for p = infinity.
double schatten_norm(const Eigen::MatrixXcd& a, SchattenExponent r);

// ||B||_s ||C||_t - ||BC||_r; requires 1/r <= 1/s + 1/t. Nonnegative up
// to roundoff by the generalized Hoelder inequality.
double hoelder_margin(const Eigen::MatrixXcd& b, const Eigen::MatrixXcd& c,
                      SchattenExponent r, SchattenExponent s, SchattenExponent t);

// q = 2p/(p-2) for 2 < p < infinity, q = infinity for 1 <= p <= 2.
SchattenExponent q_exponent(double p);

struct WeightedTailReport {
    std::vector<std::pair<long long, double>> partials; // sampled S_m
    double total = 0.0;       // S_N
    double cauchy_tail = 0.0; // S_N - S_{N/2}
};

// Partial sums S_m = sum_{n<=m} |a_n|^2 ||(g-1)e_n||^2.
WeightedTailReport weighted_tail(const DiagonalElement& g,
                                 const std::function<std::complex<double>(long long)>& a,
                                 long long horizon);
WeightedTailReport weighted_tail(const Eigen::MatrixXcd& g,
                                 const std::function<std::complex<double>(long long)>& a,
                                 long long horizon);

struct UpSample {
    Eigen::MatrixXcd g;
    double distance_norm = 0.0; // ||g - 1||_p
};

// g = exp(iX) for a seeded random Hermitian X with eigenvalue magnitudes
// (j+1)^{-decay}; ||g-1||_p stays finite along the growing-n family
// whenever decay > 1/p.
UpSample random_up_element(int n, double p, double decay, std::uint64_t seed);

} // namespace hwcl
