#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace hwcl {

// Deterministic random source. All draws are built from raw mt19937_64
// output with fixed algorithms, so equal seeds give equal streams
// independently of the standard library's distribution implementations.
class RandomState {
public:
    explicit RandomState(std::uint64_t seed) : gen_(seed) {}

    // [0,1) with 53-bit resolution
    double uniform01();
    double uniform(double lo, double hi);

    // standard normal via Box-Muller
    double normal();

    // entries (normal + i*normal)/sqrt(2)
    std::complex<double> complex_normal();

    long long uniform_int(long long lo, long long hi); // inclusive bounds

    // Haar-distributed unitary: QR of a complex Ginibre matrix with the
    // phases of the R diagonal absorbed into Q.
    Eigen::MatrixXcd haar_unitary(int n);

    // n points e^{i angle} with pairwise distinct angles (gap >= min_gap,
    // also away from angle 0).
    std::vector<std::complex<double>> distinct_unit_circle(int n, double min_gap = 1e-3);

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace hwcl
