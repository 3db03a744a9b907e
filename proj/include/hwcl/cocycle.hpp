#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hwcl/tensor_rep.hpp"
#include "hwcl/weights.hpp"

namespace hwcl {

// g = diag(e^{i theta_1}, ..., e^{i theta_s}, 1, 1, ...); g - 1 has finite
// rank, so g lies in every Schatten unitary group.
class DiagonalElement {
public:
    DiagonalElement() = default;
    explicit DiagonalElement(std::vector<double> phases) : phases_(std::move(phases)) {}

    // theta on the first k coordinates
    static DiagonalElement constant(double theta, long long k);
    // (-1)^j theta on coordinate j = 1..k
    static DiagonalElement alternating(double theta, long long k);

    double phase(long long j) const { // 1-based, 0 beyond the support
        return (j >= 1 && j <= support()) ? phases_[static_cast<std::size_t>(j - 1)] : 0.0;
    }
    std::complex<double> u(long long j) const;
    long long support() const { return static_cast<long long>(phases_.size()); }

    DiagonalElement composed(const DiagonalElement& other) const; // phases add
    Eigen::MatrixXcd matrix(int n) const;                         // top-left n x n block

private:
    std::vector<double> phases_;
};

enum class CoefficientRule { InverseSqrt, Inverse, Alternating, Custom };

// Data of the cocycle beta(g) = sum_k a_k [g.e_k^(lambda) - e_k^(lambda)].
// For mixed-sign weights the tensor factor carrying lambda^- is the dual
// family shifted by one index, so the torus acts with non-cancelling
// phases even on balanced weights.
struct CocycleWitness {
    FiniteWeight weight;
    CoefficientRule rule = CoefficientRule::InverseSqrt;
    std::vector<std::complex<double>> custom; // used when rule == Custom

    std::complex<double> coefficient(long long k) const; // a_k, k >= 1
    double coefficient_sq(long long k) const;            // |a_k|^2
};

// Eigenvalue of the diagonal element on the k-th witness vector:
// prod_i u_{k+i}^{lambda^+_i} * prod_i conj(u_{k+1+i})^{lambda^-_i}.
// Unit modulus by construction.
std::complex<double> diagonal_phase(const FiniteWeight& lam, const DiagonalElement& g, long long k);

// ||beta(g)||^2 = sum_k |a_k|^2 |phi_lambda(g,k) - 1|^2; the sum is finite
// because the phase is 1 once k reaches the support of g.
double witness_norm_sq(const CocycleWitness& w, const DiagonalElement& g);
double witness_norm(const CocycleWitness& w, const DiagonalElement& g);

enum class Trend { Bounded, Divergent };

struct GrowthReport {
    std::vector<long long> ks;
    std::vector<double> norms;     // ||beta(g_k)||
    std::vector<double> norms_sq;  // ||beta(g_k)||^2
    std::vector<double> reference; // analytic ||beta(g_k)||^2
    Trend verdict = Trend::Bounded;
    double slope = 0.0;           // fitted d(norm^2)/d(ln k) over the last decade
    double slope_reference = 0.0; // same fit on the reference values
};

const char* trend_name(Trend t);

enum class PhasePattern { Constant, Alternating };

// Norm curve k -> ||beta(g_k)|| for the phase pattern on the first k
// coordinates. Divergent verdict: the fitted slope of norm^2 against ln k
// over the last decade stays above max(0.5 * reference slope, 0.01).
// Degenerate patterns (bulk phase identically 1, e.g. a constant pattern
// on a balanced weight) are rejected.
GrowthReport growth_curve(const CocycleWitness& w, double theta, PhasePattern pattern,
                          std::vector<long long> ks);

using RepHandle = std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>;
using CocycleHandle = std::function<Eigen::VectorXcd(const Eigen::MatrixXcd&)>;

// pi(g) v - v
Eigen::VectorXcd coboundary(const Eigen::VectorXcd& v, const RepHandle& pi,
                            const Eigen::MatrixXcd& g);

// max over samples of ||beta(gh) - beta(g) - pi(g) beta(h)||
double verify_cocycle(const CocycleHandle& beta, const RepHandle& pi,
                      const std::vector<std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>>& samples);

// Mock model of a conditional cocycle: vectors v_n with v_n orthogonal to
// the declared fixed subspace H_n, compatibility v_n - v_m in H_m for m <= n.
struct ConditionalData {
    std::vector<Eigen::VectorXcd> v;                // v_1, ..., v_T
    std::vector<Eigen::MatrixXcd> fixed_projectors; // orthogonal projector onto H_n
};

struct DecompositionReport {
    std::vector<Eigen::VectorXcd> w; // w_k = v_k - v_{k-1}, v_0 = 0
    double max_cross_inner = 0.0;    // max |<w_j, w_k>| over j != k
};

DecompositionReport conditional_decompose(const ConditionalData& data, double tol = 1e-10);

enum class TailVerdict { SquareSummable, Divergent, Inconclusive };

const char* tail_verdict_name(TailVerdict v);

struct TailReport {
    TailVerdict verdict = TailVerdict::Inconclusive;
    double total = 0.0; // S_N
    double tail = 0.0;  // S_N - S_{N/2}
    std::vector<std::pair<long long, double>> partials; // sampled partial sums
};

// Partial sums S_m = sum_{k<=m} ||w_k||^2. Square-summable when the tail
// S_N - S_{N/2} < tol; divergent when the tail is large and not flattening
// against the previous half-decade.
TailReport coboundary_criterion(const std::function<double(long long)>& w_norm,
                                long long horizon, double tol = 1e-6);

struct ConjugationReport {
    TailVerdict verdict = TailVerdict::Inconclusive;
    std::complex<double> constant = 0.0; // Cesaro estimate (same-representation case)
    TailReport tail;
};

// Conjugation cocycle g -> pi(g) A pi(g)^{-1} - A for A = diag(a_n).
// Distinct representations: coboundary iff (a_n) is square summable.
// Same representation: coboundary iff a_n = c + square-summable; c is
// estimated as the mean of a_n over the last half of the horizon.
ConjugationReport conjugation_cocycle_class(const std::function<std::complex<double>(long long)>& a,
                                            long long horizon, bool same_representation,
                                            double tol = 1e-6);

// sum_{k<=truncation} a_k [g^{x m} e_k^(lambda) - e_k^(lambda)] as a dense
// vector in (C^ambient)^{x m}. Requires a pure nonnegative weight and
// truncation + lambda'_1 <= ambient.
Eigen::VectorXcd matrix_model_cocycle(const CocycleWitness& w, int ambient, int truncation,
                                      const Eigen::MatrixXcd& g, const TensorCaps& caps = {});

} // namespace hwcl
